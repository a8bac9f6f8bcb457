"""Quasi-Monte Carlo sampling of s through the unit equation r*v - l*u = 1.

With U = ceil(sqrt(p)), a prime l is drawn near U and an integer r from a
band below it; the unique solution of r*v - l*u = 1 with u < r, v < l
yields the test point s = l*u, whose classifier value follows from the
precomputed quotient table of size U in O(log p) time.  The empirical
star discrepancy of the points s/p measures how uniformly the construction
samples [1, p-2].

The band half-width follows ceil(p^(3/8) * ln p) but is clamped so the
bands stay inside [1, U]; the clamp is active for any p below roughly
10^18, which squeezes the products l*u well below p and costs uniformity
(the batch reports what it measured either way).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .modmath import legendre, primes_in_range, require_prime, solve_unit_equation
from .quotient import QuotientTable, build_table


class NoValidParams(ValueError):
    """No band width satisfies both the interval and non-emptiness constraints."""


class EmptyInput(ValueError):
    """Discrepancy and moments need at least one point."""


@dataclass
class SamplerParams:
    p: int
    U: int
    delta: int
    seed: int
    theoretical_delta: int

    def as_dict(self) -> dict:
        return {"p": self.p, "U": self.U, "delta": self.delta,
                "seed": self.seed, "theoretical_delta": self.theoretical_delta}

    @property
    def ell_range(self) -> tuple[int, int]:
        return self.U - self.delta, self.U

    @property
    def r_range(self) -> tuple[int, int]:
        return self.U - 3 * self.delta, self.U - 2 * self.delta


@dataclass
class Sample:
    ell: int
    r: int
    u: int
    v: int
    s_raw: int
    s: int
    theta: int


@dataclass
class SampleBatch:
    params: SamplerParams
    samples: list[Sample] = field(repr=False)
    discrepancy: float
    est_fractions: tuple[float, float, float]  # theta = 0, +1, -1

    @property
    def m(self) -> int:
        return len(self.samples)

    def to_json_dict(self) -> dict:
        f0, f1, fm1 = self.est_fractions
        return {"params": self.params.as_dict(), "M": self.m,
                "discrepancy": self.discrepancy, "f0": f0, "f1": f1, "fm1": fm1}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def theoretical_delta(p: int) -> int:
    return math.ceil(p ** 0.375 * math.log(p))


def theorem2_bound(p: int) -> float:
    """The asymptotic discrepancy scale p^(-1/8) * ln p (no constant).

    Exceeds 1 for every p below about 10^11, so at desk scale it is a
    reported number, never an assertion.
    """
    return p ** -0.125 * math.log(p)


def default_params(p: int, seed: int = 0) -> SamplerParams:
    """U = ceil(sqrt(p)); band width clamped into 3*delta < U and widened
    (doubling, still under the cap) until [U-delta, U] contains a prime."""
    require_prime(p)
    if p < 10_000:
        raise ValueError("sampler parameters need p >= 10^4")
    u = math.isqrt(p)
    U = u if u * u == p else u + 1
    theo = theoretical_delta(p)
    cap = (U - 1) // 3  # largest delta with 1 <= U - 3*delta
    delta = min(theo, (U - 1) // 4)
    while True:
        if delta < 1:
            raise NoValidParams(f"p = {p}: no positive band width fits")
        if primes_in_range(U - delta, U):
            return SamplerParams(p=p, U=U, delta=delta, seed=seed,
                                 theoretical_delta=theo)
        if delta >= cap:
            raise NoValidParams(f"p = {p}: no prime in [U-delta, U] for any "
                                f"delta <= {cap}")
        delta = min(2 * delta, cap)


def _batch_tables(params: SamplerParams) -> tuple[QuotientTable, list[int]]:
    table = build_table(params.p, params.U)
    lo, hi = params.ell_range
    ells = primes_in_range(lo, hi)
    if not ells:
        raise NoValidParams(f"no primes in [{lo}, {hi}]")
    return table, ells


def draw_sample(params: SamplerParams, rng: np.random.Generator,
                table: QuotientTable | None = None,
                ells: list[int] | None = None) -> Sample:
    """One sample: draw (l, r), solve the unit equation, classify s = l*u.

    r is redrawn while r <= 1 or l divides r (the only way gcd(r, l) > 1
    since l is prime).  The classifier uses quotient additivity on both
    s = l*u and s+1 = r*v, then reduces s into [1, p-2]; periodicity in s
    with period p makes the reduced value the honest classifier output.
    """
    if table is None or ells is None:
        table, ells = _batch_tables(params)
    p = params.p
    ell = ells[int(rng.integers(len(ells)))]
    r_lo, r_hi = params.r_range
    while True:
        r = int(rng.integers(r_lo, r_hi + 1))
        if r > 1 and r % ell:
            break
    u, v = solve_unit_equation(r, ell)
    s_raw = ell * u
    s = s_raw % p
    t = (s_raw * (table[ell] + table[u]) - (s_raw + 1) * (table[r] + table[v])) % p
    th = legendre(2 * s_raw * (s_raw + 1) % p * t, p)
    return Sample(ell=ell, r=r, u=u, v=v, s_raw=s_raw, s=s, theta=th)


def star_discrepancy(points) -> float:
    """Exact sup-norm star discrepancy of points in [0, 1].

    After sorting, the supremum over thresholds is attained next to a
    point, so D* = max_i max(i/M - x_(i), x_(i) - (i-1)/M).
    """
    x = np.sort(np.asarray(points, dtype=np.float64))
    m = x.size
    if m == 0:
        raise EmptyInput("no points")
    if np.any(x < 0.0) or np.any(x > 1.0):
        raise ValueError("points must lie in [0, 1]")
    i = np.arange(1, m + 1, dtype=np.float64)
    d = max(float(np.max(i / m - x)), float(np.max(x - (i - 1) / m)))
    return max(d, 0.0)


def run_batch(p: int, m: int, seed: int, delta: int | None = None,
              dedupe: bool = False) -> SampleBatch:
    """Draw m samples and measure the star discrepancy of their s/p values.

    The quotient table of size U is built once up front.  Points may
    exceed 1 by a hair when l*u lands just above p; they are clamped.
    With dedupe=True the discrepancy is taken over distinct s values
    instead of the drawn multiset (the classifier fractions always use
    the multiset).
    """
    if m < 1:
        raise ValueError("need at least one sample")
    params = default_params(p, seed)
    if delta is not None:
        if not 0 < 3 * delta < params.U:
            raise NoValidParams(f"override delta = {delta} violates 3*delta < U")
        params.delta = delta
    table, ells = _batch_tables(params)
    rng = np.random.default_rng(seed)
    samples = [draw_sample(params, rng, table, ells) for _ in range(m)]

    pts = np.minimum(np.array([s.s_raw for s in samples], dtype=np.float64) / p, 1.0)
    if dedupe:
        pts = np.unique(pts)
    disc = star_discrepancy(pts)

    thetas = np.array([s.theta for s in samples])
    f0 = float(np.count_nonzero(thetas == 0)) / m
    f1 = float(np.count_nonzero(thetas == 1)) / m
    fm1 = float(np.count_nonzero(thetas == -1)) / m
    return SampleBatch(params=params, samples=samples, discrepancy=disc,
                       est_fractions=(f0, f1, fm1))


def check_distinctness(p: int, delta: int | None = None):
    """Enumerate every (l, r) pair and group them by the product s = l*u.

    Returns (pairs, distinct, collisions) where collisions lists, for
    each repeated s, the tuples (ell, s, [r1, r2, ...]).
    """
    params = default_params(p)
    if delta is not None:
        params.delta = delta
    table, ells = _batch_tables(params)
    r_lo, r_hi = params.r_range
    seen: dict[int, tuple[int, list[int]]] = {}
    pairs = 0
    for ell in ells:
        for r in range(r_lo, r_hi + 1):
            if r <= 1 or r % ell == 0:
                continue
            u, _ = solve_unit_equation(r, ell)
            s_raw = ell * u
            pairs += 1
            if s_raw in seen:
                seen[s_raw][1].append(r)
            else:
                seen[s_raw] = (ell, [r])
    collisions = [(ell, s, rs) for s, (ell, rs) in seen.items() if len(rs) > 1]
    return pairs, len(seen), collisions
