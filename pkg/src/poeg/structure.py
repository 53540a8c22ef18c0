"""Planarity, maximum cliques, small subgroup detectors and the planarity/clique predicates."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field

import networkx as nx
import numpy as np

from .graph import (
    CLIQUE,
    CUBE,
    CYCLE4,
    Graph,
    build_poeg,
    classify_component,
    components,
    is_degenerate_clique,
)
from .groups import Group, UnsupportedOperation, p_torsion
from .numtheory import prime_power


# planarity ------------------------------------------------------------------

@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    method: str = "lr"
    witness: object = field(default=None, compare=False)


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def is_planar(g: Graph, witness: bool = False) -> PlanarityResult:
    """Planarity verdict; the Euler bound |E| <= 3|V| - 6 rejects dense graphs up front."""
    if g.n >= 3 and g.edge_count > 3 * g.n - 6:
        return PlanarityResult(False, method="edge-bound")
    planar, cert = nx.check_planarity(to_networkx(g), counterexample=witness)
    if not witness:
        return PlanarityResult(planar)
    if planar:
        return PlanarityResult(True, witness=cert.get_data())
    return PlanarityResult(False, witness=sorted(cert.nodes))


def _has_k5_or_k33_subgraph(n: int, adj: list[set[int]]) -> bool:
    for S in itertools.combinations(range(n), 5):
        if all(b in adj[a] for a, b in itertools.combinations(S, 2)):
            return True
    for S in itertools.combinations(range(n), 6):
        for left in itertools.combinations(S[1:], 2):
            L = (S[0],) + left
            R = [v for v in S if v not in L]
            if all(r in adj[l] for l in L for r in R):
                return True
    return False


def planar_by_minors(g: Graph) -> bool:
    """Brute-force oracle via Wagner's theorem: look for a K5 or K3,3 minor.

    Every minor is a subgraph of some contraction, so it is enough to contract
    edges down to five vertices and test for the two subgraphs at each stage.
    Only sensible for about eight vertices or fewer.
    """
    start = frozenset(frozenset(e) for e in g.edges())
    seen = set()

    def rec(n: int, edges: frozenset) -> bool:
        key = (n, edges)
        if key in seen:
            return False
        seen.add(key)
        adj = [set() for _ in range(n)]
        for e in edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        if n >= 5 and _has_k5_or_k33_subgraph(n, adj):
            return True
        if n <= 5:
            return False
        for e in edges:
            a, b = sorted(e)
            # merge b into a, then relabel n-1 -> b
            new = set()
            for f in edges:
                x, y = tuple(f)
                x = a if x == b else x
                y = a if y == b else y
                if x == y:
                    continue
                x = b if x == n - 1 and b != n - 1 else x
                y = b if y == n - 1 and b != n - 1 else y
                new.add(frozenset((x, y)))
            if rec(n - 1, frozenset(new)):
                return True
        return False

    return not rec(g.n, start)


# cliques ----------------------------------------------------------------------

@dataclass(frozen=True)
class CliqueResult:
    omega: int
    witness: tuple[int, ...]


def max_clique(g: Graph) -> CliqueResult:
    """Exact maximum clique by branch and bound with greedy-colouring bounds.

    Vertices are ordered by descending degree (ties by index); the witness is the
    first maximum clique met in that expansion order, reported ascending.
    """
    n = g.n
    if n == 0:
        return CliqueResult(0, ())
    order = sorted(range(n), key=lambda v: (-int(g.degrees[v]), v))
    pos = {v: i for i, v in enumerate(order)}
    # bitsets over positions in `order`
    nbr = [0] * n
    for v in range(n):
        bits = 0
        for w in g.neighbours(v).tolist():
            bits |= 1 << pos[w]
        nbr[pos[v]] = bits

    best: list[int] = [0]  # positions, not vertex ids

    def colour_sort(P: int) -> list[tuple[int, int]]:
        # greedy sequential colouring in position order; returns (vertex, colour) by colour
        out = []
        uncoloured = P
        colour = 0
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~low
                avail &= ~nbr[v]
                uncoloured &= ~low
                out.append((v, colour))
        return out

    def expand(R: list[int], P: int) -> None:
        nonlocal best
        coloured = colour_sort(P)
        for v, c in reversed(coloured):
            if len(R) + c <= len(best):
                return
            R.append(v)
            newP = P & nbr[v]
            if newP:
                expand(R, newP)
            elif len(R) > len(best):
                best = list(R)
            R.pop()
            P &= ~(1 << v)

    expand([], (1 << n) - 1)
    witness = tuple(sorted(order[i] for i in best))
    for a, b in itertools.combinations(witness, 2):
        if not g.adjacency[a, b]:
            raise AssertionError(f"clique witness not complete: {a} !~ {b}")
    return CliqueResult(len(witness), witness)


# abelian p-group invariants ---------------------------------------------------

def elementary_abelian_rank(G: Group, p: int) -> int:
    if G.abelian_shape is None:
        raise UnsupportedOperation(f"{G.name}: rank needs an abelian shape")
    by_shape = sum(1 for n in G.abelian_shape if n % p == 0)
    size = len(p_torsion(G, p))
    by_torsion = round(math.log(size, p))
    if p ** by_torsion != size or by_torsion != by_shape:
        raise AssertionError(f"{G.name}: rank mismatch ({by_shape} vs |G[{p}]|={size})")
    return by_shape


def clique_closed_form_abelian(G: Group) -> int:
    if G.abelian_shape is None:
        raise ValueError(f"{G.name} is not an abelian group with known shape")
    pp = prime_power(G.order)
    if pp is None:
        raise ValueError(f"{G.name} is not a p-group")
    p, _ = pp
    k = elementary_abelian_rank(G, p)
    if p == 2:
        return 2 ** k
    return (p ** k + 1) // 2


# subgroup detectors -------------------------------------------------------------

def generated_subgroup(G: Group, gens) -> frozenset[int]:
    """Close a generating set under multiplication (finite groups need no inverses)."""
    gens = list(dict.fromkeys(int(g) for g in gens))
    elems = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = G.op(x, s)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


def _is_d4(G: Group, H: frozenset[int]) -> bool:
    if len(H) != 8:
        return False
    if all(G.op(a, b) == G.op(b, a) for a in H for b in H):
        return False
    return any(G.orders[h] == 4 for h in H)


def _require_two_group(G: Group) -> None:
    if G.order & (G.order - 1):
        raise ValueError(f"{G.name} has order {G.order}, not a power of 2")


def detect_forbidden_2group_subgroups(G: Group) -> dict:
    _require_two_group(G)
    invol = np.flatnonzero(G.orders == 2).tolist()
    has_d4 = False
    for x, y in itertools.combinations(invol, 2):
        if G.orders[G.op(x, y)] == 4 and _is_d4(G, generated_subgroup(G, (x, y))):
            has_d4 = True
            break
    has_z2_3 = False
    for x, y in itertools.combinations(invol, 2):
        if G.op(x, y) != G.op(y, x):
            continue
        V = generated_subgroup(G, (x, y))
        for z in invol:
            if z in V or G.op(x, z) != G.op(z, x) or G.op(y, z) != G.op(z, y):
                continue
            H = generated_subgroup(G, (x, y, z))
            if len(H) == 8 and all(G.orders[h] == 2 for h in H if h != 0):
                has_z2_3 = True
                break
        if has_z2_3:
            break
    return {"has_D4": has_d4, "has_Z2cubed": has_z2_3, "involution_count": len(invol)}


def planarity_necessary_condition(G: Group) -> dict:
    """Which clause of the planar-graph group list G satisfies (None if none)."""
    n = G.order
    orders = G.orders
    n2 = int((orders == 2).sum())
    n3 = int((orders == 3).sum())
    pp = prime_power(n)
    m2 = n
    while m2 % 2 == 0:
        m2 //= 2
    rest = m2
    while rest % 3 == 0:
        rest //= 3
    clauses = {
        "Z5": n == 5,
        "cyclic 3-group": pp is not None and pp[0] == 3 and int(orders.max()) == n,
        "2-group with 1 or 3 involutions": pp is not None and pp[0] == 2 and n2 in (1, 3),
        "2^m 3^n with unique subgroups of order 2 and 3": rest == 1 and n % 6 == 0 and n2 == 1 and n3 == 2,
    }
    holding = [name for name, ok in clauses.items() if ok]
    return {
        "clause": holding[0] if holding else None,
        "holding": holding,
        "involutions": n2,
        "order3_elements": n3,
    }


def two_group_sufficiency_check(G: Group) -> dict:
    """For a 2-group without D4 and Z2^3 subgroups: the graph must be planar and
    its components K4 (or K_{1+n2}), 4-cycles and cubes. Away from the identity
    component all vertices of a component share one order; with three
    involutions, order-4 components are 4-cycles and the rest are cubes.

    The 4-cycle/cube shapes are only asserted when there are three involutions;
    with a single involution the raw labels are reported and K1/K2 components
    are flagged as degenerate.
    """
    flags = detect_forbidden_2group_subgroups(G)
    g = build_poeg(G)
    n2 = flags["involution_count"]
    census: Counter = Counter()
    degenerate: Counter = Counter()
    unexpected = []
    for comp in components(g):
        label = classify_component(g, comp)
        census[str(label)] += 1
        orders = {int(G.orders[v]) for v in comp}
        if comp[0] == 0:
            ok = label.kind == CLIQUE and label.param == 1 + n2
        elif len(orders) != 1:
            ok = False
        elif n2 == 3:
            ok = label.kind == (CYCLE4 if orders == {4} else CUBE)
        else:
            ok = is_degenerate_clique(label)
            if ok:
                degenerate[str(label)] += 1
        if not ok:
            unexpected.append((comp, str(label)))
    hypothesis = not flags["has_D4"] and not flags["has_Z2cubed"]
    planar = is_planar(g).planar
    return {
        **flags,
        "hypothesis": hypothesis,
        "planar": planar,
        "census": sorted(census.items()),
        "degenerate": sorted(degenerate.items()),
        "unexpected": [(list(c), lab) for c, lab in unexpected],
        "passed": (not hypothesis) or (planar and not unexpected),
    }
