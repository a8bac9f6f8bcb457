"""Statistics of the censuses across primes.

Two summaries, mirroring how the census data is usually tabulated:

* moments of the normalized count X = (N_1(p) - p/2) / sqrt(3p/2),
  compared against the standard normal moments (0, 1, 0, 3, ...);
* a frequency table of N_0(p) per residue class of p mod 3, against a
  Poisson model with mean 1/6 per orbit.  For p = 1 mod 3 the two roots
  of x^2 + x + 1 force N_0 = 6k + 2; for p = 2 mod 3 the pattern is 6k.

The two known Wieferich primes (1093 and 3511) break the 6k pattern
because the three-element orbit {1, -1/2, -2} classifies tame for them;
the frequency table excludes them by default and lists the exclusions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .counting import CountRecord

NORMAL_MOMENTS = (0.0, 1.0, 0.0, 3.0, 0.0, 15.0, 0.0, 105.0)

WIEFERICH_KNOWN = (1093, 3511)


class EmptyInput(ValueError):
    pass


class UnexcludedWieferich(ValueError):
    """A Wieferich prime is present but exclusion was disabled."""


@dataclass
class MomentsReport:
    prime_range: tuple[int, int]
    count: int
    moments: tuple[float, ...]  # E[X^k], k = 1..kmax
    normal_reference: tuple[float, ...] = NORMAL_MOMENTS


@dataclass
class PoissonBin:
    k: int
    t1: int
    t2: int
    prediction1: float
    prediction2: float


@dataclass
class PoissonReport:
    bins: list[PoissonBin]
    n1_class: int
    n2_class: int
    excluded: list[int]
    anomalies: list[int]


def normalize_n1(record: CountRecord) -> float:
    """X = (N_1(p) - p/2) / sqrt(3p/2)."""
    p = record.p
    return (record.n1 - p / 2.0) / math.sqrt(1.5 * p)


def moments(records, kmax: int = 8) -> MomentsReport:
    """E[X^k] for k = 1..kmax, each prime one observation.

    Sums are accumulated with math.fsum, which is exact for double
    inputs; the 8th powers over hundreds of thousands of terms would
    otherwise lose digits.
    """
    records = list(records)
    if not records:
        raise EmptyInput("no records")
    xs = [normalize_n1(r) for r in records]
    n = len(xs)
    out = []
    for k in range(1, kmax + 1):
        out.append(math.fsum(x ** k for x in xs) / n)
    lo = min(r.p for r in records)
    hi = max(r.p for r in records)
    return MomentsReport(prime_range=(lo, hi), count=n, moments=tuple(out))


def poisson_prediction(n_class: int, k: int) -> float:
    """Expected count of class members in bin k under Poisson(1/6)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return n_class * math.exp(-1.0 / 6.0) * (1.0 / 6.0) ** k / math.factorial(k)


def poisson_table(records, kmax: int | None = None,
                  exclude_wieferich: bool = True) -> PoissonReport:
    """Frequency table of N_0(p): T1(k) counts p = 1 mod 3 with N_0 = 6k+2,
    T2(k) counts p = 2 mod 3 with N_0 = 6k.

    Only primes p >= 5 enter.  Records whose N_0 fits neither pattern for
    their class land in the anomalies list, which must stay empty once
    the Wieferich primes are excluded.
    """
    kept: list[CountRecord] = []
    excluded: list[int] = []
    for rec in records:
        if rec.p < 5:
            continue
        if rec.p in WIEFERICH_KNOWN:
            if not exclude_wieferich:
                raise UnexcludedWieferich(f"{rec.p} present in the record set")
            excluded.append(rec.p)
            continue
        kept.append(rec)
    if not kept:
        raise EmptyInput("no usable records")

    t1: dict[int, int] = {}
    t2: dict[int, int] = {}
    n1_class = n2_class = 0
    anomalies: list[int] = []
    for rec in kept:
        if rec.class3 == 1:
            n1_class += 1
            if rec.n0 % 6 == 2:
                k = (rec.n0 - 2) // 6
                t1[k] = t1.get(k, 0) + 1
            else:
                anomalies.append(rec.p)
        else:
            n2_class += 1
            if rec.n0 % 6 == 0:
                k = rec.n0 // 6
                t2[k] = t2.get(k, 0) + 1
            else:
                anomalies.append(rec.p)

    top = max([*t1.keys(), *t2.keys(), 0])
    if kmax is None:
        kmax = top
    elif kmax < top and not anomalies:
        # never silently drop occupied bins
        kmax = top
    bins = [PoissonBin(k=k, t1=t1.get(k, 0), t2=t2.get(k, 0),
                       prediction1=poisson_prediction(n1_class, k),
                       prediction2=poisson_prediction(n2_class, k))
            for k in range(kmax + 1)]
    return PoissonReport(bins=bins, n1_class=n1_class, n2_class=n2_class,
                         excluded=sorted(excluded), anomalies=sorted(anomalies))


def n0_growth_diagnostic(records) -> tuple[int, float]:
    """(p*, max over records of n0 / p^(2/3)); informational only."""
    records = list(records)
    if not records:
        raise EmptyInput("no records")
    best = max(records, key=lambda r: r.n0 / r.p ** (2.0 / 3.0))
    return best.p, best.n0 / best.p ** (2.0 / 3.0)


def moments_text(report: MomentsReport) -> str:
    lines = [f"moments of X over {report.count} primes in "
             f"[{report.prime_range[0]}, {report.prime_range[1]}]",
             f"{'k':>2}  {'E[X^k]':>12}  {'normal':>8}"]
    for i, m in enumerate(report.moments):
        ref = (report.normal_reference[i]
               if i < len(report.normal_reference) else float("nan"))
        lines.append(f"{i + 1:>2}  {m:>12.5f}  {ref:>8.1f}")
    return "\n".join(lines)


def poisson_text(report: PoissonReport) -> str:
    lines = [f"N_0 frequency table: {report.n1_class} primes of class 1, "
             f"{report.n2_class} of class 2"
             + (f", excluded {report.excluded}" if report.excluded else ""),
             f"{'k':>2}  {'T1(k)':>8}  {'T2(k)':>8}  {'pred1':>10}  {'pred2':>10}"]
    for b in report.bins:
        lines.append(f"{b.k:>2}  {b.t1:>8}  {b.t2:>8}  "
                     f"{b.prediction1:>10.2f}  {b.prediction2:>10.2f}")
    if report.anomalies:
        lines.append(f"anomalies: {report.anomalies}")
    return "\n".join(lines)


def moments_json(report: MomentsReport) -> dict:
    return {"prime_range": list(report.prime_range), "count": report.count,
            "moments": {str(k + 1): m for k, m in enumerate(report.moments)},
            "normal_reference": list(report.normal_reference)}


def poisson_json(report: PoissonReport) -> dict:
    return {"n1_class": report.n1_class, "n2_class": report.n2_class,
            "excluded": report.excluded, "anomalies": report.anomalies,
            "bins": [{"k": b.k, "t1": b.t1, "t2": b.t2,
                      "prediction1": b.prediction1,
                      "prediction2": b.prediction2} for b in report.bins]}
