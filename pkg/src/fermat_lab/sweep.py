"""Parallel census sweeps over prime ranges, with checkpointed resume.

A sweep enumerates primes in [lo, hi) with a segmented sieve, dispatches
per-prime censuses to a thread pool (the counting kernels release the
GIL), and appends records to the output file strictly in ascending p
order.  A checkpoint written after every flushed chunk makes interrupted
sweeps resumable; resuming with a different range or mode is refused via
a config digest.

The census fields of the output are deterministic for a given config,
independent of worker count and scheduling; the elapsed column is wall
clock and varies run to run.
"""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .counting import CSV_HEADER, CountRecord, count
from .modmath import PRIME_LIMIT, iter_prime_blocks

CHUNK_PRIMES = 256


class ChecksumMismatch(RuntimeError):
    """Checkpoint belongs to a different sweep configuration."""


@dataclass
class SweepConfig:
    lo: int
    hi: int
    output_path: str | os.PathLike
    mode: str = "auto"
    workers: int = 1
    checkpoint_path: str | os.PathLike | None = None
    include_wieferich: bool = True
    fmt: str = "csv"

    def __post_init__(self):
        if not 3 <= self.lo <= self.hi <= PRIME_LIMIT:
            raise ValueError(f"need 3 <= lo <= hi <= 2^31, got [{self.lo}, {self.hi})")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.fmt not in ("csv", "jsonl"):
            raise ValueError(f"unknown format {self.fmt!r}")

    def digest(self) -> str:
        payload = json.dumps({"lo": self.lo, "hi": self.hi, "mode": self.mode,
                              "include_wieferich": self.include_wieferich,
                              "fmt": self.fmt}, sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()


@dataclass
class Checkpoint:
    last_completed_p: int
    records_written: int
    config_hash: str

    def save(self, path) -> None:
        tmp = Path(path).with_suffix(".tmp")
        tmp.write_text(json.dumps(self.__dict__))
        os.replace(tmp, path)

    @classmethod
    def load(cls, path) -> "Checkpoint":
        data = json.loads(Path(path).read_text())
        return cls(**data)


def _format_row(rec: CountRecord, fmt: str) -> str:
    if fmt == "csv":
        return rec.to_csv_row()
    return json.dumps({"p": rec.p, "class3": rec.class3, "n0": rec.n0,
                       "n1": rec.n1, "nm1": rec.nm1, "mode": rec.mode,
                       "elapsed": rec.elapsed})


def _parse_row(line: str, fmt: str) -> CountRecord:
    if fmt == "csv":
        return CountRecord.from_csv_row(line.split(","))
    d = json.loads(line)
    return CountRecord(**d)


def _resume_state(config: SweepConfig) -> tuple[list[CountRecord], int]:
    """Load prior progress; truncate any rows past the checkpoint."""
    cp_path = config.checkpoint_path
    out_path = Path(config.output_path)
    if cp_path is None or not Path(cp_path).exists():
        return [], 0
    cp = Checkpoint.load(cp_path)
    if cp.config_hash != config.digest():
        raise ChecksumMismatch(f"checkpoint {cp_path} was written by a different "
                               f"sweep configuration")
    if not out_path.exists():
        return [], 0
    with open(out_path) as fh:
        lines = fh.read().splitlines()
    body = lines[1:] if config.fmt == "csv" else lines
    body = body[: cp.records_written]
    done = [_parse_row(line, config.fmt) for line in body]
    # rewrite without any partial tail beyond the checkpoint; the file
    # content, not the checkpoint counter, decides where to resume
    _write_all(config, done)
    return done, (done[-1].p if done else 0)


def _write_all(config: SweepConfig, records) -> None:
    with open(config.output_path, "w") as fh:
        if config.fmt == "csv":
            fh.write(CSV_HEADER + "\n")
        for rec in records:
            fh.write(_format_row(rec, config.fmt) + "\n")


def _count_chunk(primes, mode: str) -> list[CountRecord]:
    # largest first for balance inside the pool; output re-sorted ascending
    recs = [count(p, mode) for p in sorted(primes, reverse=True)]
    recs.sort(key=lambda r: r.p)
    return recs


def run_sweep(config: SweepConfig, progress=None) -> list[CountRecord]:
    """Run (or resume) the sweep; returns every record in ascending p order.

    progress, if given, is called as progress(done_primes, total_primes)
    after each flushed chunk.
    """
    if config.mode in ("auto", "orbitwise", "table"):
        from . import _kernels

        if _kernels.HAVE_NUMBA:
            _kernels.warmup()
            if config.hi > 8:
                _kernels.spf_upto(config.hi - 1)  # shared read-only across workers

    done, resume_p = _resume_state(config)
    if not done and resume_p == 0:
        _write_all(config, [])

    skip = {1093, 3511} if not config.include_wieferich else set()
    todo: list[int] = []
    for block in iter_prime_blocks(max(config.lo, resume_p + 1), config.hi - 1):
        todo.extend(int(p) for p in block if int(p) not in skip)
    total = len(done) + len(todo)

    chunks = [todo[i: i + CHUNK_PRIMES] for i in range(0, len(todo), CHUNK_PRIMES)]
    records = list(done)
    with open(config.output_path, "a") as fh, \
            ThreadPoolExecutor(max_workers=config.workers) as pool:
        futures = [pool.submit(_count_chunk, chunk, config.mode)
                   for chunk in chunks]
        for fut in futures:  # submission order keeps p ascending
            recs = fut.result()
            for rec in recs:
                fh.write(_format_row(rec, config.fmt) + "\n")
            fh.flush()
            records.extend(recs)
            if config.checkpoint_path is not None:
                Checkpoint(last_completed_p=records[-1].p,
                           records_written=len(records),
                           config_hash=config.digest()).save(config.checkpoint_path)
            if progress is not None:
                progress(len(records), total)
    return records
