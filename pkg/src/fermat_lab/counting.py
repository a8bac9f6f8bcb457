"""Exact censuses N_0(p), N_1(p), N_-1(p) of the three reduction types.

Three interchangeable algorithms with different time/space profiles:

* streaming   - evaluates theta from the definition for each s, O(log p)
                memory, no tables; the slowest but the most direct.
* table       - builds the full quotient table once, then one table read
                pair plus one Legendre symbol per s; O(p) memory.
* orbitwise   - walks the orbit partition with a visited bitmap and
                evaluates theta once per orbit (about a sixth of the
                evaluations) at O(p) memory.

All three must produce identical records; the test suite enforces that.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass

import numpy as np

from .modmath import legendre, primes_in_range, require_prime
from .quotient import build_table, fermat_quotient
from .theta import theta

CSV_FIELDS = ("p", "class3", "n0", "n1", "nm1", "mode", "elapsed")
CSV_HEADER = ",".join(CSV_FIELDS)

MODES = ("streaming", "table", "orbitwise")

# Below this, streaming beats paying for table construction.
AUTO_MODE_CUTOFF = 10_000


@dataclass
class CountRecord:
    p: int
    class3: int
    n0: int
    n1: int
    nm1: int
    mode: str
    elapsed: float

    def __post_init__(self):
        assert self.n0 + self.n1 + self.nm1 == self.p - 2

    def counts(self) -> tuple[int, int, int]:
        return self.n0, self.n1, self.nm1

    def to_csv_row(self) -> str:
        return (f"{self.p},{self.class3},{self.n0},{self.n1},{self.nm1},"
                f"{self.mode},{self.elapsed:.6f}")

    @classmethod
    def from_csv_row(cls, row: list[str]) -> "CountRecord":
        p, class3, n0, n1, nm1 = (int(x) for x in row[:5])
        return cls(p, class3, n0, n1, nm1, row[5], float(row[6]))


def write_csv(records, path) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(CSV_HEADER + "\n")
        for rec in records:
            fh.write(rec.to_csv_row() + "\n")


def read_csv(path) -> list[CountRecord]:
    out = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is not None and header != list(CSV_FIELDS):
            raise ValueError(f"{path}: unexpected header {header!r}")
        for row in reader:
            if row:
                out.append(CountRecord.from_csv_row(row))
    return out


def _record(p, counts, mode, t0) -> CountRecord:
    n0, n1, nm1 = counts
    return CountRecord(p=p, class3=p % 3, n0=n0, n1=n1, nm1=nm1,
                       mode=mode, elapsed=time.perf_counter() - t0)


def count_streaming(p: int) -> CountRecord:
    """Direct census: one quotient evaluation per s, constant memory.

    Consecutive s share a quotient (q_p(s+1) becomes the next q_p(s)),
    so the cost is one exponentiation mod p^2 plus one Legendre symbol
    per element.
    """
    require_prime(p)
    t0 = time.perf_counter()
    n = [0, 0, 0]  # theta = 0, +1, -1
    q_s = 0  # q_p(1)
    for s in range(1, p - 1):
        q_s1 = fermat_quotient(s + 1, p)
        n[theta(p, s, q_s, q_s1)] += 1
        q_s = q_s1
    return _record(p, (n[0], n[1], n[-1]), "streaming", t0)


def _census_from_values(p: int, values: np.ndarray) -> tuple[int, int, int]:
    """Vectorized full census over a quotient-table array (numpy fallback)."""
    s = np.arange(1, p - 1, dtype=np.int64)
    qs = values[1: p - 1].astype(np.int64)
    qs1 = values[2: p].astype(np.int64)
    t = (s * qs - (s + 1) * qs1) % p
    v = s * (s + 1) % p * 2 % p * t % p
    qr = np.zeros(p, dtype=bool)
    k = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
    qr[k * k % p] = True
    n0 = int(np.count_nonzero(v == 0))
    n1 = int(np.count_nonzero(qr[v]))
    return n0, n1, (p - 2) - n0 - n1


def count_table(p: int) -> CountRecord:
    """Census via a full quotient table (memory O(p), fastest per element)."""
    require_prime(p)
    t0 = time.perf_counter()
    from . import _kernels

    if _kernels.HAVE_NUMBA and p >= 5:
        counts = _kernels.census(p, "table")
    else:
        counts = _census_from_values(p, build_table(p, p - 1).values)
    return _record(p, counts, "table", t0)


def _orbitwise_py(p: int) -> tuple[int, int, int]:
    """Reference orbit-walk census in plain Python (small p, no numba)."""
    from .orbits import _inverse_table, _orbit_members

    table = build_table(p, p - 1)
    inv = _inverse_table(p)
    seen = bytearray(p)
    n = [0, 0, 0]
    for s in range(1, p - 1):
        if seen[s]:
            continue
        members = _orbit_members(p, s, inv[s], inv[p - 1 - s])
        for e in members:
            seen[e] = 1
        n[theta(p, s, table[s], table[s + 1])] += len(members)
    return n[0], n[1], n[-1]


def count_orbitwise(p: int) -> CountRecord:
    """Census evaluating theta once per orbit (theta is orbit-constant)."""
    require_prime(p)
    if p < 5:
        return count_streaming(p)
    t0 = time.perf_counter()
    from . import _kernels

    if _kernels.HAVE_NUMBA:
        counts = _kernels.census(p, "orbitwise")
    else:
        counts = _orbitwise_py(p)
    return _record(p, counts, "orbitwise", t0)


_COUNTERS = {
    "streaming": count_streaming,
    "table": count_table,
    "orbitwise": count_orbitwise,
}


def count(p: int, mode: str = "auto") -> CountRecord:
    """Census of p in the requested mode; auto picks by size."""
    if mode == "auto":
        mode = "orbitwise" if p > AUTO_MODE_CUTOFF else "streaming"
    try:
        fn = _COUNTERS[mode]
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}, expected one of {MODES}")
    return fn(p)


def wieferich_scan(limit: int) -> list[int]:
    """All primes p <= limit with q_p(2) = 0, i.e. 2^(p-1) = 1 mod p^2."""
    if limit < 2:
        return []
    out = []
    for p in primes_in_range(2, limit):
        if p > 2 and pow(2, p - 1, p * p) == 1:
            out.append(p)
    return out
