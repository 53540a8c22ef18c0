"""Small exact number-theory helpers: primality, factorisation, totient, Moebius, Ramanujan sums."""

from __future__ import annotations

import cmath
import math
from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of ``n`` as sorted ``(p, e)`` pairs. ``factorize(1) == ()``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` if ``n = p**e`` with ``e >= 1``, else None."""
    f = factorize(n)
    if len(f) != 1:
        return None
    return f[0]


def phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def ramanujan_sum(s: int, n: int) -> int:
    """Ramanujan sum ``c(s, n)`` via the totient/Moebius closed form.

    Both the totient ratio and the Moebius argument use ``gcd(s, n)``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if s < 0:
        raise ValueError("s must be non-negative")
    m = n // math.gcd(s, n)
    return phi(n) // phi(m) * mobius(m)


def ramanujan_sum_direct(s: int, n: int) -> complex:
    """Float evaluation of the defining sum over k coprime to n; used as a cross-check."""
    total = 0j
    for k in range(1, n + 1):
        if math.gcd(k, n) == 1:
            total += cmath.exp(2j * math.pi * k * s / n)
    return total


def integer_partitions(n: int, max_part: int | None = None):
    """Yield the partitions of ``n`` as non-increasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest
