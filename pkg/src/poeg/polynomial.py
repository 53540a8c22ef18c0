"""Exact integer polynomials and characteristic polynomials of integer matrices.

``char_poly`` reduces the matrix to upper Hessenberg form modulo a run of
25-bit primes and lifts the coefficients by Chinese remaindering. The primes
are taken until their product exceeds twice a proven coefficient bound, so
the lift is exact. ``char_poly_leverrier`` is a plain big-integer
Faddeev-LeVerrier recurrence kept as an independent route for small matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

DEFAULT_MAX_DIM = 300
_PRIME_CEILING = 1 << 25


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients low-to-high with no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c) or (0,))

    @classmethod
    def from_roots(cls, roots) -> "IntPolynomial":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division by a monic divisor; exact over the integers."""
        if not divisor.is_monic:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = divisor.degree
        if self.degree < d:
            return IntPolynomial((0,)), self
        quot = [0] * (self.degree - d + 1)
        for k in range(self.degree - d, -1, -1):
            c = rem[k + d]
            quot[k] = c
            if c:
                for i, dc in enumerate(divisor.coeffs):
                    rem[k + i] -= c * dc
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[:d]) or (0,))

    def divides(self, other: "IntPolynomial") -> bool:
        """True if ``self`` (monic) divides ``other`` exactly."""
        _, r = other.divmod(self)
        return r.is_zero

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def synthetic_division(self, root: int) -> tuple["IntPolynomial", int]:
        """Divide by (x - root); returns quotient and remainder p(root)."""
        acc = 0
        out = []
        for c in reversed(self.coeffs):
            acc = acc * root + c
            out.append(acc)
        rem = out.pop()
        return IntPolynomial(tuple(reversed(out)) or (0,)), rem

    def discriminant_quadratic(self) -> int:
        if self.degree != 2:
            raise ValueError("not a quadratic")
        c, b, a = self.coeffs
        return b * b - 4 * a * c

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0 and self.degree > 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else "+"
                terms.append(f"{coef} {mono}")
            else:
                sign = "-" if c < 0 else "+"
                terms.append(f"{sign} {abs(c)}{('*' + mono) if mono else ''}")
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


# characteristic polynomials -------------------------------------------------

@lru_cache(maxsize=1)
def _prime_pool(count: int = 2000) -> tuple[int, ...]:
    """The ``count`` largest primes below 2^25, via a segmented sieve."""
    width = 1 << 16
    out: list[int] = []
    hi = _PRIME_CEILING
    small = _small_primes(math.isqrt(_PRIME_CEILING) + 1)
    while len(out) < count:
        lo = hi - width
        is_p = np.ones(width, dtype=bool)
        for q in small:
            start = (-lo) % q
            is_p[start::q] = False
        found = (lo + np.flatnonzero(is_p))[::-1]
        out.extend(int(x) for x in found[: count - len(out)])
        hi = lo
    return tuple(out)


def _small_primes(limit: int) -> list[int]:
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for q in range(2, math.isqrt(limit) + 1):
        if sieve[q]:
            sieve[q * q::q] = False
    return np.flatnonzero(sieve).tolist()


def coefficient_bound(M: np.ndarray) -> int:
    """Bound on |coeff| of det(xI - M).

    The coefficient of x^(n-k) is +-e_k(eigenvalues), and |e_k| <= C(n, k) q^k
    where q bounds the mean eigenvalue modulus: the max absolute row sum in
    general, and the root-mean-square ||M||_F / sqrt(n) when M is symmetric
    (Maclaurin's inequality on the real spectrum).
    """
    n = M.shape[0]
    if n == 0:
        return 1
    q = int(np.abs(M).sum(axis=1).max())
    if (M == M.T).all():
        frob2 = int((M.astype(object) ** 2).sum())
        q = min(q, math.isqrt(-(-frob2 // n)) + 1)
    return max(math.comb(n, k) * q ** k for k in range(n + 1))


def _fmod(x: np.ndarray, p: int) -> np.ndarray:
    """Exact residue in [0, p) of an integer-valued float array with |x| < 2**53."""
    r = x - p * np.floor(x / p)
    r[r < 0] += p
    r[r >= p] -= p
    return r


def _charpoly_mod_p(M: np.ndarray, p: int) -> np.ndarray:
    """Coefficients (low-to-high) of det(xI - M) mod p via Hessenberg reduction.

    The reduction runs in float64: entries stay below p < 2**25, so products are
    below 2**50 and every intermediate is an exactly represented integer.
    Matrix-vector products split the multiplier into 13-bit halves for the same reason.
    """
    n = M.shape[0]
    H = (M % p).astype(np.float64)
    for j in range(n - 2):
        nz = np.flatnonzero(H[j + 1:, j])
        if len(nz) == 0:
            continue
        i = j + 1 + int(nz[0])
        if i != j + 1:
            H[[i, j + 1], :] = H[[j + 1, i], :]
            H[:, [i, j + 1]] = H[:, [j + 1, i]]
        inv = pow(int(H[j + 1, j]), -1, p)
        u = _fmod(H[j + 2:, j] * inv, p)
        if not u.any():
            continue
        # columns left of j are already zero below the subdiagonal
        H[j + 2:, j:] = _fmod(H[j + 2:, j:] - np.outer(u, H[j + 1, j:]), p)
        u_hi = np.floor(u / 8192.0)
        u_lo = u - 8192.0 * u_hi
        block = H[:, j + 2:]
        hi = _fmod(block @ u_hi, p)
        lo = _fmod(block @ u_lo, p)
        H[:, j + 1] = _fmod(H[:, j + 1] + _fmod(hi * 8192.0, p) + lo, p)
    H = H.astype(np.int64)
    # Hessenberg recurrence: P[m] is the char poly of the leading m x m block.
    # T[i] holds the product of the i subdiagonal entries just above row m.
    P = np.zeros((n + 1, n + 1), dtype=np.int64)
    P[0, 0] = 1
    sub = np.concatenate([[0], np.diagonal(H, -1)])
    T = np.ones(1, dtype=np.int64)
    for m in range(1, n + 1):
        row = np.zeros(n + 1, dtype=np.int64)
        row[1:m + 1] = P[m - 1, :m]
        row[:m] -= H[m - 1, m - 1] * P[m - 1, :m] % p
        if m >= 2:
            T = np.concatenate([[1], (sub[m - 1] * T[:m - 1]) % p])
            # coefficient of P[m-1-i] for i = 1..m-1
            c = (T[1:m] * H[m - 2::-1, m - 1][:m - 1]) % p
            row[:m - 1] -= (c @ P[m - 2::-1, :m - 1]) % p
        P[m] = row % p
    return P[n]


def char_poly(M, method: str = "modular", max_dim: int = DEFAULT_MAX_DIM) -> IntPolynomial:
    """det(xI - M) for a square integer matrix, exactly."""
    M = np.asarray(M, dtype=object) if method == "leverrier" else np.asarray(M, dtype=np.int64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("matrix must be square")
    n = M.shape[0]
    if n > max_dim:
        raise ValueError(f"matrix dimension {n} exceeds cap {max_dim}")
    if n == 0:
        return IntPolynomial((1,))
    if method == "leverrier":
        return char_poly_leverrier(M)
    if method != "modular":
        raise ValueError(f"unknown method {method!r}")
    bound = 2 * coefficient_bound(M) + 1
    modulus = 1
    residues, moduli = [], []
    for p in _prime_pool():
        residues.append(_charpoly_mod_p(M, p))
        moduli.append(p)
        modulus *= p
        if modulus > bound:
            break
    else:
        raise ValueError("coefficient bound exceeds the prime pool")
    coeffs = _crt(residues, moduli)
    half = modulus // 2
    return IntPolynomial(tuple(c - modulus if c > half else c for c in coeffs))


def _crt(residues, moduli) -> list[int]:
    n = len(residues[0])
    acc = [int(x) for x in residues[0]]
    mod = moduli[0]
    for r, p in zip(residues[1:], moduli[1:]):
        inv = pow(mod % p, -1, p)
        nxt = []
        for a, b in zip(acc, r.tolist()):
            k = ((b - a) * inv) % p
            nxt.append(a + mod * k)
        acc = nxt
        mod *= p
    assert len(acc) == n
    return acc


def char_poly_leverrier(M) -> IntPolynomial:
    """Faddeev-LeVerrier over Python integers; every division is exact."""
    A = np.asarray(M, dtype=object)
    n = A.shape[0]
    ident = np.eye(n, dtype=np.int64).astype(object)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        Mk = A.dot(Mk) + coeffs[n - k + 1] * ident
        tr = int(np.trace(A.dot(Mk)))
        assert tr % k == 0
        coeffs[n - k] = -tr // k
    return IntPolynomial(tuple(coeffs))


# integer roots --------------------------------------------------------------

def _iroot_ceil(x: int, k: int) -> int:
    """Smallest r >= 0 with r**k >= x."""
    if x <= 0:
        return 0
    lo, hi = 0, 1 << (x.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** k >= x:
            hi = mid
        else:
            lo = mid + 1
    return lo


def root_bound(p: IntPolynomial) -> int:
    """Integer bound on the modulus of every root of a monic polynomial.

    Minimum of the Cauchy bound 1 + max|c_i| and the Fujiwara bound
    2 * max(|c_{n-k}|^(1/k), |c_0/2|^(1/n)).
    """
    n = p.degree
    if n <= 0:
        return 0
    c = p.coeffs
    cauchy = 1 + max(abs(x) for x in c[:-1])
    terms = [_iroot_ceil(abs(c[n - k]), k) for k in range(1, n)]
    terms.append(_iroot_ceil((abs(c[0]) + 1) // 2, n))
    fujiwara = 2 * max(terms) if terms else 0
    return min(cauchy, fujiwara)


def integer_root_factorization(p: IntPolynomial, bound: int | None = None):
    """Split a monic polynomial into integer roots (with multiplicity) and a root-free residual.

    Returns ``(roots, residual)`` where ``roots`` is a sorted list of
    ``(value, multiplicity)`` pairs.
    """
    if not p.is_monic:
        raise ValueError("polynomial must be monic")
    roots: dict[int, int] = {}
    cur = p
    while cur.degree > 0 and cur.coeffs[0] == 0:
        cur = IntPolynomial(cur.coeffs[1:])
        roots[0] = roots.get(0, 0) + 1
    if cur.degree > 0:
        B = root_bound(cur)
        if bound is not None:
            B = min(B, bound)
        for r in range(1, B + 1):
            for cand in (r, -r):
                if cur.degree == 0:
                    break
                while cur.degree > 0 and cur.coeffs[0] % cand == 0:
                    q, rem = cur.synthetic_division(cand)
                    if rem != 0:
                        break
                    cur = q
                    roots[cand] = roots.get(cand, 0) + 1
    return sorted(roots.items()), cur
