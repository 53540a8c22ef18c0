"""Group descriptors and the verification catalogues."""

from __future__ import annotations

import math
import re

from .groups import (
    GroupSpec,
    bundled_a4,
    cayley_table,
    cyclic,
    dicyclic,
    dihedral,
    product,
)
from .numtheory import factorize, integer_partitions

GRAMMAR = "Z:n | D:n | Dic:m | A4 | table:<path>, products joined by 'x' (e.g. Z:3xZ:9)"

_FACTOR = re.compile(r"^(Z|D|Dic):(\d+)$")


class DescriptorError(ValueError):
    pass


def parse_group_descriptor(text: str) -> GroupSpec:
    text = text.strip()
    if text.startswith("table:"):
        path = text[len("table:"):]
        if not path:
            raise DescriptorError(f"empty path in {text!r}; grammar: {GRAMMAR}")
        return cayley_table(path)
    factors = []
    for token in text.split("x"):
        token = token.strip()
        if token == "A4":
            factors.append(bundled_a4())
            continue
        m = _FACTOR.match(token)
        if not m:
            raise DescriptorError(f"bad token {token!r} in {text!r}; grammar: {GRAMMAR}")
        kind, n = m.group(1), int(m.group(2))
        try:
            factors.append({"Z": cyclic, "D": dihedral, "Dic": dicyclic}[kind](n))
        except ValueError as exc:
            raise DescriptorError(f"bad token {token!r}: {exc}") from None
    if len(factors) == 1:
        return factors[0]
    return product(*factors)


def _abelian_invariant_factors(n: int):
    """All abelian groups of order n, as non-increasing invariant-factor lists."""
    per_prime = []
    for p, e in factorize(n):
        per_prime.append([(p, lam) for lam in integer_partitions(e)])
    if not per_prime:
        yield (1,)
        return

    def rec(i, acc):
        if i == len(per_prime):
            yield acc
            return
        for choice in per_prime[i]:
            yield from rec(i + 1, acc + [choice])

    for combo in rec(0, []):
        length = max(len(lam) for _, lam in combo)
        factors = []
        for k in range(length):
            factors.append(math.prod(p ** lam[k] for p, lam in combo if k < len(lam)))
        yield tuple(factors)


def abelian_groups(n: int) -> list[GroupSpec]:
    out = []
    for factors in sorted(_abelian_invariant_factors(n), key=lambda f: (len(f), [-x for x in f])):
        out.append(cyclic(factors[0]) if len(factors) == 1 else product(*(cyclic(f) for f in factors)))
    return out


def abelian_groups_up_to(max_order: int, min_order: int = 2) -> list[GroupSpec]:
    return [s for n in range(min_order, max_order + 1) for s in abelian_groups(n)]


def abelian_p_groups_up_to(max_order: int, primes=(2, 3, 5, 7)) -> list[GroupSpec]:
    out = []
    for p in primes:
        q = p
        while q <= max_order:
            out.extend(abelian_groups(q))
            q *= p
    return out


def dihedral_groups(max_n: int = 16) -> list[GroupSpec]:
    return [dihedral(n) for n in range(2, max_n + 1)]


def dicyclic_groups(max_order: int = 32) -> list[GroupSpec]:
    return [dicyclic(m) for m in range(2, max_order // 4 + 1)]


# extra non-abelian 2-groups built from products
_EXTRA_TWO_GROUPS = (
    "Dic:2xZ:2", "D:4xZ:2", "Dic:2xZ:4", "Dic:4xZ:2", "D:4xZ:4", "Dic:2xZ:2xZ:2",
    "Dic:2xZ:8", "Dic:8xZ:2", "Dic:4xZ:4", "Dic:2xDic:2", "D:8xZ:2", "D:4xD:4",
)


def default_catalog(max_order: int = 100) -> list[GroupSpec]:
    """Abelian groups of order <= max_order, D_n (n <= 16), dicyclic groups of order <= 32, A4."""
    specs = abelian_groups_up_to(max_order)
    specs += [s for s in dihedral_groups(16) if s.order <= max(max_order, 32)]
    specs += dicyclic_groups(32)
    specs.append(bundled_a4())
    return specs


def two_group_catalog(max_order: int = 64) -> list[GroupSpec]:
    specs = [s for s in abelian_p_groups_up_to(max_order, primes=(2,))]
    n = 2
    while 2 * n <= max_order:
        specs.append(dihedral(n))
        n *= 2
    m = 2
    while 4 * m <= max_order:
        specs.append(dicyclic(m))
        m *= 2
    for d in _EXTRA_TWO_GROUPS:
        s = parse_group_descriptor(d)
        if s.order <= max_order:
            specs.append(s)
    return specs
