import cmath
import math

from hypothesis import given, strategies as st

from poeg.numtheory import (
    factorize,
    integer_partitions,
    is_prime,
    mobius,
    phi,
    prime_power,
    ramanujan_sum,
    ramanujan_sum_direct,
)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@given(st.integers(1, 5000))
def test_factorize_roundtrip(n):
    f = factorize(n)
    assert math.prod(p ** e for p, e in f) == n
    assert all(is_prime(p) and e >= 1 for p, e in f)
    assert [p for p, _ in f] == sorted(p for p, _ in f)


def test_prime_power():
    assert prime_power(343) == (7, 3)
    assert prime_power(12) is None
    assert prime_power(1) is None


@given(st.integers(1, 2000))
def test_phi_matches_count(n):
    assert phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_mobius_values():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


@given(st.integers(0, 200), st.integers(1, 200))
def test_ramanujan_sum_against_root_of_unity_sum(s, n):
    direct = ramanujan_sum_direct(s, n)
    assert abs(direct - ramanujan_sum(s, n)) < 1e-6


def test_ramanujan_sum_direct_definition():
    # c_4(1): primitive 4th roots of unity are i and -i
    assert abs(ramanujan_sum_direct(1, 4)) < 1e-12
    assert abs(ramanujan_sum_direct(2, 4) - sum(cmath.exp(2j * cmath.pi * 2 * k / 4) for k in (1, 3))) < 1e-12


def test_integer_partitions_counts():
    # partition numbers p(1..8)
    assert [len(list(integer_partitions(k))) for k in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    assert all(list(lam) == sorted(lam, reverse=True) for lam in integer_partitions(6))
