"""Exact modular arithmetic and small number-theoretic primitives.

Everything here works with plain Python integers, which are exact at any
size, so products modulo p^2 never wrap even for p close to 2^31.  The
supported prime range is 3 <= p < 2^31; primality is checked with a
deterministic Miller-Rabin witness set that is exact below 2^64.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

PRIME_LIMIT = 1 << 31

# Deterministic Miller-Rabin witnesses, exact for all n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class NotInvertible(ValueError):
    """gcd(a, m) != 1, so a has no inverse modulo m."""


class NoSolution(ValueError):
    """The unit equation r*v - ell*u = 1 has no solution (gcd(r, ell) != 1)."""


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality check for n < 2^64."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_prime(p: int) -> int:
    """Validate that p is an odd prime in [3, 2^31); return it unchanged."""
    if not isinstance(p, int):
        raise TypeError(f"prime must be an int, got {type(p).__name__}")
    if p < 3 or p >= PRIME_LIMIT or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime below 2^31")
    return p


def mul_mod(a: int, b: int, m: int) -> int:
    """a*b mod m, exact (Python integers never overflow)."""
    assert 0 <= a < m and 0 <= b < m
    return a * b % m


def pow_mod(base: int, exp: int, m: int) -> int:
    """base^exp mod m by square-and-multiply (O(log exp) multiplications)."""
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    assert 0 <= base < m
    return pow(base, exp, m)


def inv_mod(a: int, m: int) -> int:
    """Inverse of a modulo m via the extended Euclidean algorithm."""
    a %= m
    t, new_t = 0, 1
    r, new_r = m, a
    while new_r:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    if r != 1:
        raise NotInvertible(f"gcd({a}, {m}) = {r}, not invertible")
    return t % m


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0, by the binary algorithm."""
    assert n > 0 and n % 2 == 1
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p): 0 if p | a, +1 for nonzero squares, -1 otherwise.

    Computed with the binary Jacobi algorithm; the Euler-criterion route
    a^((p-1)/2) serves as an independent oracle in the test suite.
    """
    a %= p
    if a == 0:
        return 0
    return jacobi(a, p)


def solve_unit_equation(r: int, ell: int) -> tuple[int, int]:
    """Solve r*v - ell*u = 1 with 0 < u < r and 0 < v < ell.

    The pair is unique: v is the inverse of r modulo ell and u follows by
    exact division.  Raises NoSolution when gcd(r, ell) != 1.
    """
    if r <= 1:
        raise ValueError("r must exceed 1")
    try:
        v = inv_mod(r, ell)
    except NotInvertible as exc:
        raise NoSolution(f"gcd({r}, {ell}) != 1") from exc
    u = (r * v - 1) // ell
    assert r * v - ell * u == 1 and 0 < u < r and 0 < v < ell
    return u, v


def roots_of_unity3(p: int) -> tuple[int, int] | None:
    """Both roots of x^2 + x + 1 = 0 mod p, or None when p = 2 mod 3.

    For p = 1 mod 3 a primitive cube root of unity is found as
    z^((p-1)/3) for the smallest z that does not map to 1; the two roots
    are that value and its square, returned in increasing order.
    """
    require_prime(p)
    if p < 5 or p % 3 != 1:
        return None
    e = (p - 1) // 3
    for z in range(2, p):
        w = pow(z, e, p)
        if w != 1:
            break
    w2 = w * w % p
    s0, s1 = sorted((w, w2))
    assert (s0 * s0 + s0 + 1) % p == 0 and (s1 * s1 + s1 + 1) % p == 0
    return s0, s1


def _simple_sieve(limit: int) -> np.ndarray:
    """Boolean sieve of Eratosthenes up to limit inclusive."""
    if limit < 2:
        return np.zeros(max(limit + 1, 0), dtype=bool)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i:: i] = False
    return sieve


def _sieve_segment(lo: int, hi: int, base: np.ndarray) -> np.ndarray:
    """Primes in [lo, hi] as an int64 array, given base primes to sqrt(hi)."""
    seg = np.ones(hi - lo + 1, dtype=bool)
    if lo <= 1:
        seg[: min(2 - lo, hi - lo + 1)] = False
    for q in base:
        q = int(q)
        if q * q > hi:
            break
        start = max(q * q, ((lo + q - 1) // q) * q)
        if start <= hi:
            seg[start - lo:: q] = False
    return np.flatnonzero(seg) + lo


_SEGMENT = 1 << 21


def primes_in_range(a: int, b: int) -> list[int]:
    """All primes in [a, b], ascending, via a segmented sieve."""
    if not 2 <= a <= b < PRIME_LIMIT:
        raise ValueError(f"need 2 <= a <= b < 2^31, got [{a}, {b}]")
    base = np.flatnonzero(_simple_sieve(math.isqrt(b)))
    out: list[int] = []
    lo = a
    while lo <= b:
        hi = min(lo + _SEGMENT - 1, b)
        out.extend(_sieve_segment(lo, hi, base).tolist())
        lo = hi + 1
    return out


def iter_prime_blocks(a: int, b: int, block: int = _SEGMENT):
    """Yield ascending numpy blocks of the primes in [a, b]."""
    if a > b:
        return
    base = np.flatnonzero(_simple_sieve(math.isqrt(b)))
    lo = max(a, 2)
    while lo <= b:
        hi = min(lo + block - 1, b)
        seg = _sieve_segment(lo, hi, base)
        if seg.size:
            yield seg
        lo = hi + 1


def smallest_prime_factors(n: int) -> np.ndarray:
    """int32 array spf of length n+1 with spf[w] = least prime factor of w.

    spf[w] == w exactly when w is prime; entries 0 and 1 are left at 0.
    """
    spf = np.zeros(n + 1, dtype=np.int32)
    for i in range(2, math.isqrt(n) + 1):
        if spf[i] == 0:
            sl = spf[i * i:: i]
            sl[sl == 0] = i
            spf[i] = i
    rest = np.flatnonzero(spf[2:] == 0) + 2
    spf[rest] = rest
    return spf
