"""Independent verification chain for the congruences behind the census.

The function f(u) = sum_{j=1}^{p-1} u^j / j mod p ties together three
expressions that must agree for every s in [1, p-2]:

    (a) s q_p(s) - (s+1) q_p(s+1)            (additive expansion)
    (b) (s^p - (s+1)^p + 1) / p              (exact division mod p^2)
    (c) f(s+1)                               (the power sum)

hb_chain_check verifies all three pointwise, which exercises quotient
additivity, the expansion used by theta, and the power-sum congruence in
one sweep.  The fiber sizes of f are a diagnostic for how rarely the
census sees theta = 0.
"""

from __future__ import annotations

import numpy as np

from .modmath import inv_mod, require_prime
from .quotient import fermat_quotient


class UOutOfRange(ValueError):
    """f(u) is defined here for 1 <= u <= p-1."""


def f_eval(p: int, u: int) -> int:
    """f(u) = sum_{j=1}^{p-1} u^j / j mod p, by the literal O(p) sum."""
    require_prime(p)
    if not 1 <= u <= p - 1:
        raise UOutOfRange(f"u = {u} outside [1, {p - 1}]")
    inv = [0] * p
    inv[1] = 1
    for j in range(2, p):
        inv[j] = (p - p // j) * inv[p % j] % p
    acc = 0
    pw = 1
    for j in range(1, p):
        pw = pw * u % p
        acc = (acc + pw * inv[j]) % p
    return acc


def f_table(p: int) -> np.ndarray:
    """f(u) for every u in [0, p-1] (entries 0 and 1 are 0), vectorized.

    Same literal power sum as f_eval, evaluated column-by-column over all
    u at once; O(p^2) elementwise work, practical to a few times 10^4.
    """
    require_prime(p)
    inv = np.zeros(p, dtype=np.int64)
    inv[1] = 1
    for j in range(2, p):
        inv[j] = (p - p // j) * inv[p % j] % p
    u = np.arange(p, dtype=np.int64)
    pw = np.ones(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for j in range(1, p):
        pw = pw * u % p
        acc = (acc + pw * inv[j]) % p
    acc[0] = 0
    return acc


def hb_chain_check(p: int) -> bool:
    """True iff expressions (a), (b), (c) agree for every s in [1, p-2].

    (b) is computed with exact division: the numerator is taken mod p^2
    and must be divisible by p (anything else is an arithmetic bug, not
    a verification failure, hence the hard error).
    """
    require_prime(p)
    pp = p * p
    table = f_table(p)
    q_s = 0  # q_p(1)
    sp = pow(1, p, pp)
    for s in range(1, p - 1):
        q_s1 = fermat_quotient(s + 1, p)
        a = (s * q_s - (s + 1) * q_s1) % p
        s1p = pow(s + 1, p, pp)
        num = (sp - s1p + 1) % pp
        if num % p:
            raise ArithmeticError(f"p = {p}, s = {s}: numerator not divisible by p")
        b = (num // p) % p
        c = int(table[s + 1])
        if not a == b == c:
            return False
        q_s = q_s1
        sp = s1p
    return True


def f_fiber_count(p: int, r: int) -> int:
    """Number of u in [2, p-1] with f(u) = r mod p."""
    table = f_table(p)
    return int(np.count_nonzero(table[2:] == r % p))


def fiber_sizes(p: int) -> np.ndarray:
    """Histogram of f over u in [2, p-1]: entry r counts the fiber over r."""
    table = f_table(p)
    return np.bincount(table[2:], minlength=p)


def max_fiber_diagnostic(p: int) -> tuple[int, float]:
    """(largest fiber size, its ratio to p^(2/3)); informational only."""
    m = int(fiber_sizes(p).max())
    return m, m / p ** (2.0 / 3.0)
