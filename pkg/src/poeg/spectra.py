"""Exact adjacency/Laplacian spectra, equitable partitions and the character-sum Laplacian engine."""

from __future__ import annotations

import csv
import io
import itertools
import json
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .graph import Graph, components
from .groups import (
    Group,
    UnsupportedOperation,
    character_indices,
    character_sum_S,
    conjugate_index,
    is_real_character,
    prime_order_set,
)
from .numtheory import is_prime, ramanujan_sum, ramanujan_sum_direct  # noqa: F401  (re-exported)
from .polynomial import DEFAULT_MAX_DIM, IntPolynomial, char_poly, integer_root_factorization

ADJACENCY = "adjacency"
LAPLACIAN = "laplacian"


@dataclass(frozen=True)
class SpectrumReport:
    """Integer eigenvalues with multiplicities plus the monic factor that has no integer roots."""

    kind: str
    eigenvalues: tuple[tuple[int, int], ...]
    residual: IntPolynomial = IntPolynomial((1,))

    @property
    def integral(self) -> bool:
        return self.residual.degree == 0

    @property
    def size(self) -> int:
        return sum(m for _, m in self.eigenvalues) + self.residual.degree

    @property
    def values(self) -> set[int]:
        return {v for v, _ in self.eigenvalues}

    def multiplicity(self, value: int) -> int:
        return dict(self.eigenvalues).get(value, 0)

    def multiset(self) -> Counter:
        return Counter(dict(self.eigenvalues))

    def trace(self) -> int:
        """Sum of all eigenvalues, residual roots included (minus its second coefficient)."""
        total = sum(v * m for v, m in self.eigenvalues)
        if self.residual.degree >= 1:
            total -= self.residual.coeffs[-2]
        return total

    @classmethod
    def from_counter(cls, kind: str, counts) -> "SpectrumReport":
        return cls(kind, tuple(sorted((int(v), int(m)) for v, m in counts.items() if m > 0)))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "eigenvalues": [[v, m] for v, m in self.eigenvalues],
            "residual": list(self.residual.coeffs),
            "integral": self.integral,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        eig = " ".join(f"{v}^{m}" for v, m in self.eigenvalues) or "-"
        return (
            f"kind: {self.kind}\n"
            f"eigenvalues: {eig}\n"
            f"residual: {list(self.residual.coeffs)}\n"
            f"integral: {str(self.integral).lower()}\n"
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["eigenvalue", "multiplicity"])
        w.writerows(self.eigenvalues)
        return buf.getvalue()


def graph_matrix(g: Graph, kind: str) -> np.ndarray:
    if kind == ADJACENCY:
        return g.adjacency_matrix()
    if kind == LAPLACIAN:
        return g.laplacian_matrix()
    raise ValueError(f"unknown matrix kind {kind!r}")


def graph_char_poly(g: Graph, kind: str = ADJACENCY, max_dim: int = DEFAULT_MAX_DIM) -> IntPolynomial:
    """Characteristic polynomial of the adjacency or Laplacian matrix.

    Both matrices are block diagonal over connected components, so the
    polynomial is the product of the per-component polynomials.
    """
    if g.n > max_dim:
        raise ValueError(f"graph on {g.n} vertices exceeds the spectrum cap {max_dim}")
    M = graph_matrix(g, kind)
    cache: dict[bytes, IntPolynomial] = {}
    out = IntPolynomial((1,))
    for comp in components(g):
        block = M[np.ix_(comp, comp)]
        key = block.tobytes() + bytes(str(block.shape), "ascii")
        if key not in cache:
            cache[key] = char_poly(block, max_dim=max_dim)
        out = out * cache[key]
    return out


def integrality_verdict(g: Graph, kind: str = ADJACENCY, max_dim: int = DEFAULT_MAX_DIM) -> SpectrumReport:
    poly = graph_char_poly(g, kind, max_dim=max_dim)
    M = graph_matrix(g, kind)
    bound = int(np.abs(M).sum(axis=1).max()) if g.n else 0
    roots, residual = integer_root_factorization(poly, bound=bound)
    return SpectrumReport(kind, tuple(roots), residual)


# equitable partitions -------------------------------------------------------

@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(int(v) for v in b)) for b in self.blocks)
        if any(len(b) == 0 for b in blocks):
            raise ValueError("partition has an empty block")
        flat = [v for b in blocks for v in b]
        if len(flat) != len(set(flat)):
            raise ValueError("partition blocks overlap")
        object.__setattr__(self, "blocks", blocks)

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    def check_covers(self, n: int) -> None:
        if sorted(v for b in self.blocks for v in b) != list(range(n)):
            raise ValueError(f"partition does not cover vertices 0..{n - 1}")

    def block_of(self) -> dict[int, int]:
        return {v: i for i, b in enumerate(self.blocks) for v in b}

    def refines(self, other: "Partition") -> bool:
        """True if every block of self lies inside one block of other."""
        where = other.block_of()
        return all(len({where[v] for v in b}) == 1 for b in self.blocks)

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(tuple((v,) for v in range(n)))

    @classmethod
    def trivial(cls, n: int) -> "Partition":
        return cls((tuple(range(n)),))


@dataclass(frozen=True)
class QuotientMatrix:
    b: tuple[tuple[int, ...], ...]

    def as_array(self) -> np.ndarray:
        return np.array(self.b, dtype=np.int64).reshape(len(self.b), len(self.b))

    def char_poly(self) -> IntPolynomial:
        return char_poly(self.as_array())


def order_partition(G: Group) -> Partition:
    orders = G.orders
    return Partition(tuple(tuple(np.flatnonzero(orders == o).tolist()) for o in sorted(set(orders.tolist()))))


def _block_counts(g: Graph, pi: Partition) -> np.ndarray:
    indicator = np.zeros((g.n, len(pi.blocks)), dtype=np.int64)
    for j, b in enumerate(pi.blocks):
        indicator[list(b), j] = 1
    return g.adjacency_matrix() @ indicator


def is_equitable(g: Graph, pi: Partition) -> tuple[bool, QuotientMatrix | None]:
    pi.check_covers(g.n)
    counts = _block_counts(g, pi)
    rows = []
    for b in pi.blocks:
        sub = counts[list(b)]
        if not (sub == sub[0]).all():
            return False, None
        rows.append(tuple(int(x) for x in sub[0]))
    return True, QuotientMatrix(tuple(rows))


def coarsest_equitable_refinement(g: Graph, pi: Partition) -> Partition:
    """Colour refinement: split blocks by neighbour counts into every block until stable."""
    pi.check_covers(g.n)
    while True:
        counts = _block_counts(g, pi)
        new_blocks = []
        for b in pi.blocks:
            groups: dict[tuple, list[int]] = {}
            for v in b:
                groups.setdefault(tuple(counts[v].tolist()), []).append(v)
            new_blocks.extend(tuple(groups[k]) for k in sorted(groups))
        if len(new_blocks) == len(pi.blocks):
            return pi
        pi = Partition(tuple(new_blocks))


def quotient_divides_charpoly(g: Graph, pi: Partition, max_dim: int = DEFAULT_MAX_DIM) -> bool:
    ok, Q = is_equitable(g, pi)
    if not ok:
        raise ValueError("partition is not equitable")
    return Q.char_poly().divides(graph_char_poly(g, ADJACENCY, max_dim=max_dim))


# Laplacian spectra of abelian groups ---------------------------------------

def laplacian_spectrum_abelian(G: Group) -> SpectrumReport:
    """Laplacian spectrum of the prime order element graph from the character sums over S.

    Real characters give |S| - chi(S); each conjugate pair of non-real characters
    gives |S| + |chi(S)| and |S| - |chi(S)|.
    """
    if G.abelian_shape is None:
        raise UnsupportedOperation(f"{G.name}: character engine needs an abelian shape")
    s = len(prime_order_set(G))
    counts: Counter = Counter()
    for t in character_indices(G):
        if is_real_character(G, t):
            counts[s - character_sum_S(G, t)] += 1
        elif t < conjugate_index(G, t):
            c = abs(character_sum_S(G, t))
            counts[s + c] += 1
            counts[s - c] += 1
    return SpectrumReport.from_counter(LAPLACIAN, counts)


def lspec_zpr_closed_form(p: int, r: int) -> SpectrumReport:
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if r < 1:
        raise ValueError("r must be positive")
    pr, pr1 = p ** r, p ** (r - 1)
    counts: Counter = Counter()
    counts[0] += (pr1 + 1) // 2
    counts[2 * (p - 1)] += (pr1 - 1) // 2
    counts[p] += (pr - pr1) // 2
    counts[p - 2] += (pr - pr1) // 2
    return SpectrumReport.from_counter(LAPLACIAN, counts)


def lspec_zn_odd_eigenvalue_set(factorization) -> set[int]:
    """Laplacian eigenvalue set of the graph on Z_n, n odd, from its prime factorisation."""
    primes = [int(p) for p, _ in factorization]
    exps = [int(r) for _, r in factorization]
    if len(set(primes)) != len(primes):
        raise ValueError("repeated prime in factorisation")
    if any(p == 2 or not is_prime(p) for p in primes):
        raise ValueError("factorisation must use odd primes")
    if any(r < 1 for r in exps):
        raise ValueError("exponents must be positive")
    k = len(primes)
    total = sum(primes)
    out = {0, total - 2 * k, total}
    if any(r >= 2 for r in exps):
        out.add(2 * (total - k))
    for size in range(1, k):
        for A in itertools.combinations(primes, size):
            pa = sum(A)
            out.add(total - pa)
            out.add(total + pa - 2 * k)
    return out
