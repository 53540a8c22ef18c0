"""Finite groups with integer-indexed elements.

Every group stores its full Cayley table as an ``int32`` numpy array with index 0
the identity. Cyclic, product, dihedral and dicyclic groups are generated from
closed-form composition rules; anything else is loaded from a Cayley-table file.
Abelian groups built from cyclic factors remember their factor orders
(``abelian_shape``), which is what the character machinery keys on.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from importlib import resources
from pathlib import Path

import numpy as np

from .numtheory import is_prime, prime_divisors

MAX_TABLE_ORDER = 512
MAX_ORDER = 4096


class UnsupportedOperation(TypeError):
    """Raised when an operation needs structure the group does not carry (e.g. abelian shape)."""


class InvalidGroupTable(ValueError):
    def __init__(self, axiom: str, witness: tuple, detail: str = ""):
        self.axiom = axiom
        self.witness = witness
        msg = f"Cayley table violates {axiom}: witness {witness}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


@dataclass(frozen=True)
class GroupSpec:
    """Descriptor of a group to build. Use the ``cyclic``/``product``/... constructors."""

    kind: str
    n: int = 0
    factors: tuple["GroupSpec", ...] = ()
    path: str | None = None

    def __post_init__(self):
        if self.kind == "cyclic" and self.n < 1:
            raise ValueError(f"cyclic group needs n >= 1, got {self.n}")
        if self.kind == "dihedral" and self.n < 2:
            raise ValueError(f"dihedral group needs n >= 2, got {self.n}")
        if self.kind == "dicyclic" and self.n < 2:
            raise ValueError(f"dicyclic group needs m >= 2, got {self.n}")
        if self.kind == "product" and not self.factors:
            raise ValueError("product needs at least one factor")
        if self.kind not in {"cyclic", "product", "dihedral", "dicyclic", "table"}:
            raise ValueError(f"unknown group kind {self.kind!r}")

    @property
    def order(self) -> int:
        if self.kind == "cyclic":
            return self.n
        if self.kind == "dihedral":
            return 2 * self.n
        if self.kind == "dicyclic":
            return 4 * self.n
        if self.kind == "product":
            return math.prod(f.order for f in self.factors)
        return load_cayley_table(self.path)[0]

    def descriptor(self) -> str:
        if self.kind == "cyclic":
            return f"Z:{self.n}"
        if self.kind == "dihedral":
            return f"D:{self.n}"
        if self.kind == "dicyclic":
            return f"Dic:{self.n}"
        if self.kind == "product":
            return "x".join(f.descriptor() for f in self.factors)
        if self.path == "A4":
            return "A4"
        return f"table:{self.path}"


def cyclic(n: int) -> GroupSpec:
    return GroupSpec("cyclic", n=n)


def product(*factors: GroupSpec) -> GroupSpec:
    flat = []
    for f in factors:
        flat.extend(f.factors if f.kind == "product" else (f,))
    return GroupSpec("product", factors=tuple(flat))


def dihedral(n: int) -> GroupSpec:
    return GroupSpec("dihedral", n=n)


def dicyclic(m: int) -> GroupSpec:
    return GroupSpec("dicyclic", n=m)


def cayley_table(path: str | Path) -> GroupSpec:
    return GroupSpec("table", path=str(path))


def bundled_a4() -> GroupSpec:
    return GroupSpec("table", path="A4")


@dataclass(frozen=True, eq=False)
class Group:
    """An immutable finite group on indices ``0..order-1`` (0 is the identity)."""

    name: str
    table: np.ndarray
    abelian_shape: tuple[int, ...] | None = None
    element_names: tuple[str, ...] = field(default=(), repr=False)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def op(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    @cached_property
    def inverses(self) -> np.ndarray:
        return np.argmin(self.table, axis=1).astype(np.int64)

    def inverse(self, g: int) -> int:
        return int(self.inverses[g])

    @cached_property
    def orders(self) -> np.ndarray:
        """Element orders by repeated composition, all elements at once."""
        n = self.order
        idx = np.arange(n)
        power = idx.copy()
        result = np.zeros(n, dtype=np.int64)
        k = 1
        while True:
            done = (power == 0) & (result == 0)
            result[done] = k
            if (result > 0).all():
                return result
            power = self.table[power, idx]
            k += 1

    @cached_property
    def exponent(self) -> int:
        return reduce(math.lcm, (int(o) for o in set(self.orders.tolist())), 1)

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def coords(self, g: int) -> tuple[int, ...]:
        """Mixed-radix coordinates of ``g`` along ``abelian_shape`` (leftmost most significant)."""
        shape = self._require_shape()
        out = []
        for n in reversed(shape):
            g, r = divmod(g, n)
            out.append(r)
        return tuple(reversed(out))

    def index_of(self, coords) -> int:
        shape = self._require_shape()
        g = 0
        for c, n in zip(coords, shape):
            g = g * n + (c % n)
        return g

    def element_name(self, g: int) -> str:
        if self.element_names:
            return self.element_names[g]
        return str(g)

    def _require_shape(self) -> tuple[int, ...]:
        if self.abelian_shape is None:
            raise UnsupportedOperation(f"{self.name} carries no abelian shape")
        return self.abelian_shape

    def __repr__(self):
        return f"Group({self.name}, order={self.order})"


# construction ---------------------------------------------------------------

def _cyclic_table(n: int) -> np.ndarray:
    idx = np.arange(n)
    return ((idx[:, None] + idx[None, :]) % n).astype(np.int32)


def _dihedral_table(n: int) -> np.ndarray:
    # element r^i s^e has index i + n*e
    idx = np.arange(2 * n)
    i, e = idx % n, idx // n
    sign = np.where(e == 1, -1, 1)
    rot = (i[:, None] + sign[:, None] * i[None, :]) % n
    ref = e[:, None] ^ e[None, :]
    return (rot + n * ref).astype(np.int32)


def _dicyclic_table(m: int) -> np.ndarray:
    # element a^i b^j has index i + 2m*j; b a = a^-1 b, b^2 = a^m
    n2 = 2 * m
    idx = np.arange(2 * n2)
    i, j = idx % n2, idx // n2
    sign = np.where(j == 1, -1, 1)
    rot = i[:, None] + sign[:, None] * i[None, :]
    jj = j[:, None] + j[None, :]
    rot = np.where(jj == 2, rot + m, rot) % n2
    return (rot + n2 * (jj % 2)).astype(np.int32)


def _product_table(tables: list[np.ndarray]) -> np.ndarray:
    sizes = [t.shape[0] for t in tables]
    n = math.prod(sizes)
    idx = np.arange(n)
    strides = [math.prod(sizes[k + 1:]) for k in range(len(sizes))]
    out = np.zeros((n, n), dtype=np.int64)
    for t, size, stride in zip(tables, sizes, strides):
        digit = (idx // stride) % size
        out += t[digit[:, None], digit[None, :]].astype(np.int64) * stride
    return out.astype(np.int32)


def _names(spec: GroupSpec) -> list[str]:
    if spec.kind == "cyclic":
        return [str(i) for i in range(spec.n)]
    if spec.kind == "dihedral":
        n = spec.n
        return [f"r^{i}" if e == 0 else f"r^{i}s" for e in range(2) for i in range(n)]
    if spec.kind == "dicyclic":
        n2 = 2 * spec.n
        return [f"a^{i}" if j == 0 else f"a^{i}b" for j in range(2) for i in range(n2)]
    if spec.kind == "product":
        parts = [_names(f) for f in spec.factors]
        return ["(" + ",".join(combo) + ")" for combo in itertools.product(*parts)]
    n = spec.order
    return [f"g{i}" for i in range(n)]


def _shape(spec: GroupSpec) -> tuple[int, ...] | None:
    if spec.kind == "cyclic":
        return (spec.n,)
    if spec.kind == "product":
        shapes = [_shape(f) for f in spec.factors]
        if any(s is None for s in shapes):
            return None
        return tuple(itertools.chain.from_iterable(shapes))
    return None


def _table(spec: GroupSpec) -> np.ndarray:
    if spec.kind == "cyclic":
        return _cyclic_table(spec.n)
    if spec.kind == "dihedral":
        return _dihedral_table(spec.n)
    if spec.kind == "dicyclic":
        return _dicyclic_table(spec.n)
    if spec.kind == "product":
        return _product_table([_table(f) for f in spec.factors])
    _, table = load_cayley_table(spec.path)
    return table


def construct_group(spec: GroupSpec) -> Group:
    if spec.order > MAX_ORDER:
        raise ValueError(f"group order {spec.order} exceeds cap {MAX_ORDER}")
    return Group(
        name=spec.descriptor(),
        table=_table(spec),
        abelian_shape=_shape(spec),
        element_names=tuple(_names(spec)),
    )


# Cayley-table files ---------------------------------------------------------

def parse_cayley_table(text: str) -> tuple[int, np.ndarray]:
    """Parse the ``order``/``table`` document (JSON or ``key:`` text form)."""
    stripped = text.strip()
    if stripped.startswith("{"):
        doc = json.loads(stripped)
        order = int(doc["order"])
        rows = doc["table"]
        rows = [r if isinstance(r, list) else _split_row(r) for r in rows]
    else:
        order = None
        rows = []
        in_table = False
        for line in stripped.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key = line.split(":", 1)[0].strip().lower()
            if key == "order" and ":" in line:
                order = int(line.split(":", 1)[1])
            elif key == "table" and ":" in line:
                in_table = True
                rest = line.split(":", 1)[1].strip()
                if rest:
                    rows.append(_split_row(rest))
            elif in_table:
                rows.append(_split_row(line))
            else:
                raise ValueError(f"unexpected line in Cayley table: {line!r}")
        if order is None:
            raise ValueError("Cayley table is missing the 'order' field")
    table = np.array(rows, dtype=np.int64)
    if table.shape != (order, order):
        raise ValueError(f"table shape {table.shape} does not match order {order}")
    validate_table(table)
    return order, table.astype(np.int32)


def _split_row(row: str) -> list[int]:
    return [int(x) for x in row.replace(",", " ").split()]


def validate_table(table: np.ndarray) -> None:
    """Check closure, identity at index 0, inverses and associativity; raise with a witness."""
    n = table.shape[0]
    if n > MAX_TABLE_ORDER:
        raise ValueError(f"Cayley-table groups are capped at order {MAX_TABLE_ORDER}")
    bad = np.argwhere((table < 0) | (table >= n))
    if len(bad):
        g, h = map(int, bad[0])
        raise InvalidGroupTable("closure", (g, h), f"product {int(table[g, h])} out of range")
    for g in range(n):
        if table[0, g] != g or table[g, 0] != g:
            raise InvalidGroupTable("identity", (0, g), "index 0 must be the identity")
    for g in range(n):
        right = np.flatnonzero(table[g] == 0)
        if len(right) == 0 or table[right[0], g] != 0:
            raise InvalidGroupTable("inverses", (g,), "no two-sided inverse")
    for a in range(n):
        left = table[table[a]]          # (ab)c for all b, c
        right = table[a][table]         # a(bc)
        diff = np.argwhere(left != right)
        if len(diff):
            b, c = map(int, diff[0])
            raise InvalidGroupTable("associativity", (a, b, c))


def load_cayley_table(path: str | None) -> tuple[int, np.ndarray]:
    if path == "A4":
        text = resources.files("poeg").joinpath("data/a4.txt").read_text()
    else:
        text = Path(path).read_text()
    return parse_cayley_table(text)


def format_cayley_table(table: np.ndarray) -> str:
    lines = [f"order: {table.shape[0]}", "table:"]
    lines += [" ".join(str(int(x)) for x in row) for row in table]
    return "\n".join(lines) + "\n"


# element queries ------------------------------------------------------------

def element_order(G: Group, g: int) -> int:
    return int(G.orders[g])


def element_order_by_powers(G: Group, g: int) -> int:
    k, x = 1, g
    while x != 0:
        x = G.op(x, g)
        k += 1
    return k


def element_order_abelian(G: Group, g: int) -> int:
    """Order from coordinates: lcm of n_i / gcd(c_i, n_i)."""
    shape = G._require_shape()
    return reduce(math.lcm, (n // math.gcd(c, n) for c, n in zip(G.coords(g), shape)), 1)


def prime_order_set(G: Group) -> frozenset[int]:
    return frozenset(int(g) for g in np.flatnonzero(prime_mask(G)))


def prime_mask(G: Group) -> np.ndarray:
    """Boolean mask over elements: True where the element order is prime."""
    primes = {o for o in set(G.orders.tolist()) if is_prime(o)}
    return np.isin(G.orders, list(primes))


def atom(G: Group, g: int) -> frozenset[int]:
    o = element_order(G, g)
    out, x = set(), 0
    for k in range(1, o + 1):
        x = G.op(x, g)
        if math.gcd(k, o) == 1:
            out.add(x)
    return frozenset(out)


def p_torsion(G: Group, p: int) -> frozenset[int]:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    G._require_shape()
    return frozenset(int(g) for g in np.flatnonzero((G.orders == 1) | (G.orders == p)))


# characters of abelian groups ------------------------------------------------

def character_indices(G: Group):
    shape = G._require_shape()
    return itertools.product(*(range(n) for n in shape))


def character_phase(G: Group, t, g: int) -> Fraction:
    """Rotation number of chi_t(g), as a fraction of a full turn in [0, 1)."""
    shape = G._require_shape()
    total = sum(Fraction(ti * ci, n) for ti, ci, n in zip(t, G.coords(g), shape))
    return total - math.floor(total)


def character_value(G: Group, t, g: int) -> complex:
    return complex(np.exp(2j * np.pi * float(character_phase(G, t, g))))


def _trivial_on_p_torsion(shape, t, p: int) -> bool:
    # G[p] is generated by e_i * (n_i / p) for every factor with p | n_i;
    # chi_t on that generator has rotation t_i / p.
    return all(Fraction(ti, p).denominator == 1 for ti, n in zip(t, shape) if n % p == 0)


def character_sum_S(G: Group, t) -> int:
    """chi_t summed over the prime-order elements, exactly.

    S is the union over primes p of G[p] minus the identity, and the character
    sum over a subgroup is its size when chi is trivial there and 0 otherwise.
    """
    shape = G._require_shape()
    if len(t) != len(shape) or any(not 0 <= ti < n for ti, n in zip(t, shape)):
        raise ValueError(f"bad character index {t} for shape {shape}")
    total = 0
    for p in prime_divisors(G.order):
        size = p ** sum(1 for n in shape if n % p == 0)
        total += (size if _trivial_on_p_torsion(shape, t, p) else 0) - 1
    return total


def character_sum_S_float(G: Group, t) -> complex:
    return sum((character_value(G, t, s) for s in prime_order_set(G)), 0j)


def conjugate_index(G: Group, t) -> tuple[int, ...]:
    shape = G._require_shape()
    return tuple((-ti) % n for ti, n in zip(t, shape))


def is_real_character(G: Group, t) -> bool:
    shape = G._require_shape()
    return all((2 * ti) % n == 0 for ti, n in zip(t, shape))
