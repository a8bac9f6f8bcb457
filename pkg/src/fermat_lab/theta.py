"""The classifier theta_{p,s} and the reduction type of Y^p = X^s(1-X).

theta_{p,s} is the Legendre symbol of 2s(s+1) q_p(s^s / (s+1)^(s+1))
modulo p, and takes values in {-1, 0, +1}.  The curve reduces tame when
theta = 0, wild split when theta = +1 and wild non-split when theta = -1.
The canonical domain is s in [1, p-2]; any other integer t with
gcd(t(t+1), p) = 1 is handled by theta_extended, which uses the fact
that theta is periodic in s with period p.
"""

from __future__ import annotations

import enum

from .modmath import inv_mod, legendre, require_prime
from .quotient import fermat_quotient


class SOutOfRange(ValueError):
    """s must lie in [1, p-2]."""


class BadResidue(ValueError):
    """t = 0 or -1 mod p: theta is undefined there."""


class ReductionType(enum.Enum):
    Tame = 0
    WildSplit = 1
    WildNonSplit = -1

    @classmethod
    def from_theta(cls, value: int) -> "ReductionType":
        return cls(value)

    @property
    def theta(self) -> int:
        return self.value


def _check_s(p: int, s: int) -> None:
    if not 1 <= s <= p - 2:
        raise SOutOfRange(f"s = {s} outside [1, {p - 2}] for p = {p}")


def theta(p: int, s: int, q_s: int, q_s1: int) -> int:
    """theta_{p,s} given precomputed q_s = q_p(s) and q_s1 = q_p(s+1).

    Uses the additive expansion q_p(s^s/(s+1)^(s+1)) = s q_p(s) -
    (s+1) q_p(s+1) mod p, so a caller holding a quotient table pays one
    Legendre symbol per s.
    """
    _check_s(p, s)
    t = (s * q_s - (s + 1) * q_s1) % p
    return legendre(2 * s * (s + 1) % p * t, p)


def theta_direct(p: int, s: int) -> int:
    """theta_{p,s} from scratch: two exponentiations mod p^2 plus theta()."""
    require_prime(p)
    _check_s(p, s)
    return theta(p, s, fermat_quotient(s, p), fermat_quotient(s + 1, p))


def theta_oracle(p: int, s: int) -> int:
    """Independent evaluation straight from the defining quotient.

    Forms w = s^s * (s+1)^(-(s+1)) mod p^2 explicitly and applies the
    Legendre symbol to 2s(s+1) q_p(w).  Exists to cross-validate the
    additive expansion used by theta(); intentionally shares nothing
    with it beyond the primitives.
    """
    require_prime(p)
    _check_s(p, s)
    pp = p * p
    w = pow(s, s, pp) * inv_mod(pow(s + 1, s + 1, pp), pp) % pp
    return legendre(2 * s * (s + 1) % p * fermat_quotient(w, p), p)


def theta_extended(p: int, t: int) -> int:
    """theta at any integer t with gcd(t(t+1), p) = 1, via periodicity mod p."""
    require_prime(p)
    s = t % p
    if s == 0 or s == p - 1:
        raise BadResidue(f"t = {t} is 0 or -1 mod {p}")
    return theta_direct(p, s)


def reduction_type(p: int, s: int) -> ReductionType:
    """Reduction type of the curve with exponent s: tame / wild split / wild non-split."""
    return ReductionType.from_theta(theta_direct(p, s))
