"""Fermat quotients q_p(u) and bulk quotient tables.

q_p(u) is the residue ((u^(p-1) mod p^2) - 1) / p, an integer in [0, p),
defined whenever gcd(u, p) = 1.  It only depends on u modulo p^2 and is
additive under multiplication: q_p(uv) = q_p(u) + q_p(v) mod p.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .modmath import inv_mod, require_prime, smallest_prime_factors


class DivisibleByP(ValueError):
    """The quotient q_p(u) is undefined because p divides u."""


class LimitTooLarge(ValueError):
    """A quotient table can cover at most [1, p-1]."""


def fermat_quotient(u: int, p: int) -> int:
    """q_p(u) in [0, p); u may be any integer not divisible by p.

    u is first reduced into [1, p^2 - 1] since the value depends only on
    u mod p^2; the power is then taken modulo p^2 and the quotient is an
    exact integer division (Fermat's little theorem guarantees p divides
    u^(p-1) - 1).
    """
    require_prime(p)
    pp = p * p
    u %= pp
    if u % p == 0:
        raise DivisibleByP(f"q_{p} undefined: {p} divides argument")
    t = pow(u, p - 1, pp)
    return (t - 1) // p


def quotient_of_rational(num: int, den: int, p: int) -> int:
    """q_p(num/den) = q_p(num) - q_p(den) mod p."""
    return (fermat_quotient(num, p) - fermat_quotient(den, p)) % p


def shift_identity(u: int, v: int, p: int) -> int:
    """q_p(u + v*p) computed from q_p(u) alone: q_p(u) - v/u mod p."""
    q = fermat_quotient(u, p)
    return (q - v * inv_mod(u % p, p)) % p


@dataclass
class QuotientTable:
    """Precomputed q_p(w) for all w in [1, limit].

    values has length limit + 1 with values[0] unused (zero); values[1]
    is always 0.  The array is immutable by convention and can be shared
    across threads.
    """

    p: int
    limit: int
    values: np.ndarray = field(repr=False)

    def __getitem__(self, w: int) -> int:
        if not 1 <= w <= self.limit:
            raise IndexError(f"w = {w} outside table range [1, {self.limit}]")
        return int(self.values[w])


# Below this size the plain Python builder is faster than paying the
# numba dispatch and table-allocation overhead.
_KERNEL_MIN_P = 4096


def build_table(p: int, limit: int) -> QuotientTable:
    """Table of q_p(w) for w in [1, limit].

    Primes w get one modular exponentiation each; composites are composed
    from their smallest-prime-factor split via additivity, one table read
    plus one addition per entry.
    """
    require_prime(p)
    if limit >= p:
        raise LimitTooLarge(f"limit {limit} must be < p = {p}")
    if limit < 1:
        raise ValueError("limit must be >= 1")

    if limit == p - 1 and p >= _KERNEL_MIN_P:
        from . import _kernels

        if _kernels.HAVE_NUMBA:
            return QuotientTable(p=p, limit=limit, values=_kernels.q_table(p))

    values = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 2:
        spf = smallest_prime_factors(limit)
        pp = p * p
        e = p - 1
        for w in range(2, limit + 1):
            s = int(spf[w])
            if s == w:
                values[w] = (pow(w, e, pp) - 1) // p
            else:
                values[w] = (values[s] + values[w // s]) % p
    return QuotientTable(p=p, limit=limit, values=values)
