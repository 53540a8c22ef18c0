"""Prime order element graphs, Cayley sum graphs, components and component templates."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .groups import Group, UnsupportedOperation, prime_mask

MAX_VERTICES = 4096


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph stored as a dense symmetric boolean matrix."""

    adjacency: np.ndarray
    labels: tuple[str, ...] = field(default=(), repr=False)

    def __post_init__(self):
        a = self.adjacency
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be square")
        if a.shape[0] > MAX_VERTICES:
            raise ValueError(f"graphs are capped at {MAX_VERTICES} vertices")
        if a.diagonal().any():
            raise ValueError("self-loops are not allowed")
        if not (a == a.T).all():
            raise ValueError("adjacency must be symmetric")

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @cached_property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    @cached_property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1).astype(np.int64)

    def neighbours(self, v: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        u, v = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(u.tolist(), v.tolist()))

    def subgraph(self, vertices) -> "Graph":
        vs = np.asarray(sorted(vertices), dtype=np.int64)
        return Graph(self.adjacency[np.ix_(vs, vs)].copy())

    def adjacency_matrix(self) -> np.ndarray:
        return self.adjacency.astype(np.int64)

    def laplacian_matrix(self) -> np.ndarray:
        a = self.adjacency_matrix()
        return np.diag(a.sum(axis=1)) - a

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u != v:
                a[u, v] = a[v, u] = True
        return cls(a)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(~np.eye(n, dtype=bool))


def build_poeg(G: Group) -> Graph:
    """x ~ y iff x != y and xy has prime order."""
    mask = prime_mask(G)
    adj = mask[G.table]
    if not (adj == adj.T).all():
        # ord(xy) == ord(yx) since they are conjugate; a failure means a broken table
        x, y = map(int, np.argwhere(adj != adj.T)[0])
        raise AssertionError(f"order(xy) != order(yx) for x={x}, y={y} in {G.name}")
    np.fill_diagonal(adj, False)
    return Graph(adj, labels=G.element_names)


def build_cayley_sum(G: Group, S) -> Graph:
    if G.abelian_shape is None and not G.is_abelian:
        raise UnsupportedOperation("Cayley sum graphs need an abelian group")
    mask = np.zeros(G.order, dtype=bool)
    mask[list(S)] = True
    adj = mask[G.table]
    np.fill_diagonal(adj, False)
    return Graph(adj, labels=G.element_names)


def components(g: Graph) -> list[list[int]]:
    """Connected components, each ascending, ordered by smallest member."""
    seen = np.zeros(g.n, dtype=bool)
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp, queue = [start], deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbours(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(int(w))
                    queue.append(w)
        out.append(sorted(comp))
    return out


# component templates --------------------------------------------------------

CLIQUE = "CLIQUE"
CYCLE4 = "CYCLE4"
CUBE = "CUBE"
COMPLETE_MULTIPARTITE_2PARTS = "COMPLETE_MULTIPARTITE_2PARTS"
COMPLEMENT_KN_BOX_P2 = "COMPLEMENT_KN_BOX_P2"
OTHER = "OTHER"


@dataclass(frozen=True)
class ComponentLabel:
    kind: str
    param: int | None = None
    degree_sequence: tuple[int, ...] = ()

    def __str__(self):
        if self.kind == OTHER:
            return f"OTHER{list(self.degree_sequence)}"
        return self.kind if self.param is None else f"{self.kind}({self.param})"


def _is_complete(a: np.ndarray) -> bool:
    k = a.shape[0]
    return int(a.sum()) == k * (k - 1)


def _is_cycle4(a: np.ndarray) -> bool:
    return a.shape[0] == 4 and (a.sum(axis=1) == 2).all() and _connected(a)


def _is_cube(a: np.ndarray) -> bool:
    # connected cubic bipartite graphs on 8 vertices are exactly K_{4,4} minus a matching
    return a.shape[0] == 8 and (a.sum(axis=1) == 3).all() and _connected(a) and _bipartite(a)


def _is_multipartite_pairs(a: np.ndarray) -> int | None:
    k = a.shape[0]
    if k < 4 or k % 2:
        return None
    # every vertex misses exactly one other vertex <=> complement is a perfect matching
    if (a.sum(axis=1) == k - 2).all():
        return k // 2
    return None


def _is_complement_kn_box_p2(a: np.ndarray) -> int | None:
    k = a.shape[0]
    if k < 6 or k % 2:
        return None
    n = k // 2
    comp = ~a
    np.fill_diagonal(comp, False)
    if not (comp.sum(axis=1) == n).all():
        return None
    v = 0
    nbrs = np.flatnonzero(comp[v])
    for partner in nbrs:
        side_a = np.array(sorted({v, *nbrs.tolist()} - {int(partner)}))
        side_b = np.setdiff1d(np.arange(k), side_a)
        if not _is_complete(comp[np.ix_(side_a, side_a)]):
            continue
        if not _is_complete(comp[np.ix_(side_b, side_b)]):
            continue
        cross = comp[np.ix_(side_a, side_b)]
        if (cross.sum(axis=0) == 1).all() and (cross.sum(axis=1) == 1).all():
            return n
    return None


def _connected(a: np.ndarray) -> bool:
    k = a.shape[0]
    if k == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in np.flatnonzero(a[v]).tolist():
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == k


def _bipartite(a: np.ndarray) -> bool:
    colour = {0: 0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in np.flatnonzero(a[v]).tolist():
            if w not in colour:
                colour[w] = 1 - colour[v]
                stack.append(w)
            elif colour[w] == colour[v]:
                return False
    return True


def matching_templates(g: Graph, comp) -> list[ComponentLabel]:
    """Every template the component is isomorphic to, most specific first.

    Some templates coincide on small cases: C4 is the 2-part multipartite graph
    K_{2,2}, and the cube is the complement of K4 box P2.
    """
    a = g.adjacency[np.ix_(comp, comp)]
    k = len(comp)
    out = []
    if _is_complete(a):
        out.append(ComponentLabel(CLIQUE, k))
    if _is_cycle4(a):
        out.append(ComponentLabel(CYCLE4))
    if _is_cube(a):
        out.append(ComponentLabel(CUBE))
    m = _is_multipartite_pairs(a)
    if m is not None:
        out.append(ComponentLabel(COMPLETE_MULTIPARTITE_2PARTS, m))
    n = _is_complement_kn_box_p2(a)
    if n is not None:
        out.append(ComponentLabel(COMPLEMENT_KN_BOX_P2, n))
    return out


def classify_component(g: Graph, comp) -> ComponentLabel:
    comp = sorted(int(v) for v in comp)
    if not comp:
        raise ValueError("empty vertex set")
    inside = np.zeros(g.n, dtype=bool)
    inside[comp] = True
    if g.adjacency[np.ix_(comp, np.flatnonzero(~inside))].any():
        raise ValueError("vertex set has edges leaving it; not a component")
    if not _connected(g.adjacency[np.ix_(comp, comp)]):
        raise ValueError("vertex set is not connected; not a component")
    labels = matching_templates(g, comp)
    if labels:
        return labels[0]
    degs = tuple(sorted(g.adjacency[np.ix_(comp, comp)].sum(axis=1).tolist(), reverse=True))
    return ComponentLabel(OTHER, degree_sequence=degs)


def is_degenerate_clique(label: ComponentLabel) -> bool:
    """K1 or K2 components away from the identity: the n=1 / m=1 collapse of the templates."""
    return label.kind == CLIQUE and label.param in (1, 2)


def component_census(g: Graph) -> Counter:
    return Counter(str(classify_component(g, c)) for c in components(g))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f'graph "{name}" {{']
    for v in range(g.n):
        label = g.labels[v] if g.labels else str(v)
        lines.append(f'  {v} [label="{v}: {label}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
