"""JIT-compiled per-prime kernels behind the counting module.

Everything here is an implementation detail.  All arithmetic stays inside
int64: the only mod-p^2 work (quotients of small seed primes) happens in
plain Python with exact integers before a kernel is entered, and inside
the kernels every product is of two residues below p < 2^31.

The kernels release the GIL, so a sweep can drive them from threads.
"""

from __future__ import annotations

import math
import threading

import numpy as np

from .modmath import _simple_sieve

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


_JIT = dict(cache=True, nogil=True)


@njit(**_JIT)
def _inv_one(a, p):
    # extended Euclid; coefficients stay below p so products fit int64
    t, new_t = 0, 1
    r, new_r = p, a
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    if t < 0:
        t += p
    return t


@njit(**_JIT)
def _q_fill(p, spf, seed_idx, seed_val):
    """Quotient table over [1, p-1] (int32, index 0 unused).

    Seeds carry q_p of every prime w with w*(w-1) < p.  Larger primes w
    are reduced without exponentiation: with k = ceil(p/w) and
    r = k*w - p (so 1 <= r < w and k < w), additivity and the shift rule
    for q_p(r + p) give q_p(w) = q_p(r) - 1/r - q_p(k) mod p.
    Composites combine their smallest-prime-factor split.
    """
    q = np.zeros(p, np.int32)
    for i in range(seed_idx.size):
        q[seed_idx[i]] = seed_val[i]
    for w in range(2, p):
        sw = spf[w]
        if sw == w:
            if w * (w - 1) >= p:
                k = (p + w - 1) // w
                r = k * w - p
                q[w] = (q[r] - _inv_one(r, p) - q[k]) % p
        else:
            q[w] = (q[sw] + q[w // sw]) % p
    return q


@njit(**_JIT)
def _inv_fill(p):
    """Inverse table over [1, p-1] (int32), classical O(p) recurrence."""
    inv = np.zeros(p, np.int32)
    inv[1] = 1
    for w in range(2, p):
        inv[w] = (p - p // w) * inv[p % w] % p
    return inv


@njit(**_JIT)
def _qr_fill(p):
    """Bitmap of nonzero quadratic residues mod p."""
    qr = np.zeros(p, np.uint8)
    half = (p - 1) // 2
    for k in range(1, half + 1):
        qr[k * k % p] = 1
    return qr


@njit(**_JIT)
def _census_full(p, q, qr):
    """Counts of theta = 0 / +1 / -1 over every s in [1, p-2]."""
    n0 = 0
    n1 = 0
    nm1 = 0
    for s in range(1, p - 1):
        t = (s * q[s] - (s + 1) * q[s + 1]) % p
        if t == 0:
            n0 += 1
        else:
            v = 2 * s * (s + 1) % p * t % p
            if qr[v]:
                n1 += 1
            else:
                nm1 += 1
    return n0, n1, nm1


@njit(**_JIT)
def _census_orbitwise(p, q, inv, qr):
    """Same census, evaluating theta once per orbit.

    Ascending sweep: an unvisited s is its orbit's minimum.  The orbit is
    {s, F s, G s, FG s, GF s, FGF s} with F s = -1-s and G s = 1/s, read
    off the inverse table, deduplicated in place.
    """
    visited = np.zeros(p, np.uint8)
    orb = np.empty(6, np.int64)
    n0 = 0
    n1 = 0
    nm1 = 0
    for s in range(1, p - 1):
        if visited[s]:
            continue
        f = p - 1 - s
        g = np.int64(inv[s])
        h = np.int64(inv[f])
        orb[0] = s
        orb[1] = f
        orb[2] = g
        orb[3] = p - 1 - g
        orb[4] = h
        orb[5] = p - 1 - h
        n = 0
        for i in range(6):
            e = orb[i]
            fresh = True
            for j in range(n):
                if orb[j] == e:
                    fresh = False
                    break
            if fresh:
                orb[n] = e
                n += 1
        t = (s * q[s] - (s + 1) * q[s + 1]) % p
        if t == 0:
            n0 += n
        else:
            v = 2 * s * (s + 1) % p * t % p
            if qr[v]:
                n1 += n
            else:
                nm1 += n
        for j in range(n):
            visited[orb[j]] = 1
    return n0, n1, nm1


# ---------------------------------------------------------------------------
# Python-side plumbing: smallest-prime-factor cache and quotient seeds.

_spf_lock = threading.Lock()
_spf_cache: np.ndarray | None = None

_SMALL_PRIME_LIMIT = 46349  # > sqrt(2^31)
_small_primes: list[int] | None = None


def spf_upto(n: int) -> np.ndarray:
    """Shared smallest-prime-factor array covering [0, n] (grow-only cache)."""
    global _spf_cache
    with _spf_lock:
        if _spf_cache is None or _spf_cache.size <= n:
            from .modmath import smallest_prime_factors

            _spf_cache = smallest_prime_factors(n)
        return _spf_cache


def _primes_small() -> list[int]:
    global _small_primes
    if _small_primes is None:
        _small_primes = np.flatnonzero(_simple_sieve(_SMALL_PRIME_LIMIT)).tolist()
    return _small_primes


def quotient_seeds(p: int) -> tuple[np.ndarray, np.ndarray]:
    """q_p of every prime w with w*(w-1) < p, computed exactly in Python."""
    idx = []
    vals = []
    pp = p * p
    e = p - 1
    for w in _primes_small():
        if w * (w - 1) >= p:
            break
        idx.append(w)
        vals.append((pow(w, e, pp) - 1) // p)
    return np.asarray(idx, np.int64), np.asarray(vals, np.int64)


def q_table(p: int, spf: np.ndarray | None = None) -> np.ndarray:
    """Quotient table values as an int32 array of length p (index 0 unused)."""
    if spf is None:
        spf = spf_upto(p - 1)
    seed_idx, seed_val = quotient_seeds(p)
    return _q_fill(p, spf[:p], seed_idx, seed_val)


def census(p: int, mode: str, spf: np.ndarray | None = None) -> tuple[int, int, int]:
    """(n0, n1, nm1) for one prime; mode is 'table' or 'orbitwise'."""
    q = q_table(p, spf)
    qr = _qr_fill(p)
    if mode == "orbitwise":
        inv = _inv_fill(p)
        n0, n1, nm1 = _census_orbitwise(p, q, inv, qr)
    else:
        n0, n1, nm1 = _census_full(p, q, qr)
    return int(n0), int(n1), int(nm1)


_warmed = False


def warmup() -> None:
    """Force JIT compilation (cached on disk after the first process)."""
    global _warmed
    if _warmed or not HAVE_NUMBA:
        return
    census(97, "orbitwise")
    census(97, "table")
    _warmed = True
