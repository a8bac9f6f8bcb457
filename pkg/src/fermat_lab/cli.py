"""Command-line surface: theta, count, orbits, sweep, sample, stats, verify.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 I/O error.
FERMAT_LAB_THREADS, when set, overrides --workers for sweeps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import counting, orbits, sampler, stats
from .counting import CSV_HEADER
from .modmath import require_prime
from .theta import ReductionType, theta_direct


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="fermat-lab",
                     description="Reduction types of Y^p = X^s(1-X): "
                                 "classifier, censuses, orbits, sampling, stats")
    sub = parser.add_subparsers(dest="command", required=True)

    p_theta = sub.add_parser("theta", help="classify one (p, s)")
    p_theta.add_argument("--p", type=int, required=True)
    p_theta.add_argument("--s", type=int, required=True)

    p_count = sub.add_parser("count", help="census of one prime")
    p_count.add_argument("--p", type=int, required=True)
    p_count.add_argument("--mode", choices=("auto",) + counting.MODES,
                         default="auto")

    p_orbits = sub.add_parser("orbits", help="orbit decomposition dump")
    p_orbits.add_argument("--p", type=int, required=True)

    p_sweep = sub.add_parser("sweep", help="census sweep over a prime range")
    p_sweep.add_argument("--from", dest="lo", type=int, required=True)
    p_sweep.add_argument("--to", dest="hi", type=int, required=True)
    p_sweep.add_argument("--out", required=True)
    p_sweep.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p_sweep.add_argument("--checkpoint", default=None)
    p_sweep.add_argument("--mode", choices=("auto",) + counting.MODES,
                         default="auto")
    p_sweep.add_argument("--format", dest="fmt", choices=("csv", "jsonl"),
                         default="csv")
    p_sweep.add_argument("--skip-wieferich", action="store_true",
                         help="drop 1093 and 3511 from the output")
    p_sweep.add_argument("--progress", action="store_true")

    p_sample = sub.add_parser("sample", help="quasi-Monte Carlo sample batch")
    p_sample.add_argument("--p", type=int, required=True)
    p_sample.add_argument("--count", dest="m", type=int, required=True)
    p_sample.add_argument("--seed", type=int, default=0)
    p_sample.add_argument("--delta", type=int, default=None)
    p_sample.add_argument("--dedupe", action="store_true",
                          help="measure discrepancy over distinct s only")
    p_sample.add_argument("--samples-csv", default=None,
                          help="also dump per-sample rows to this file")

    p_stats = sub.add_parser("stats", help="tables from a sweep CSV")
    p_stats.add_argument("--in", dest="inp", required=True)
    p_stats.add_argument("--table", choices=("moments", "poisson", "both"),
                         default="both")
    p_stats.add_argument("--kmax", type=int, default=8)
    p_stats.add_argument("--format", dest="fmt", choices=("text", "json"),
                         default="text")

    p_verify = sub.add_parser("verify", help="run the invariant suites")
    p_verify.add_argument("--max-p", dest="max_p", type=int, default=300)

    return parser


def _cmd_theta(args) -> int:
    p = require_prime(args.p)
    value = theta_direct(p, args.s)
    print(f"{value} {ReductionType.from_theta(value).name}")
    return 0


def _cmd_count(args) -> int:
    rec = counting.count(require_prime(args.p), args.mode)
    print(CSV_HEADER)
    print(rec.to_csv_row())
    return 0


def _cmd_orbits(args) -> int:
    decomp = orbits.decompose(require_prime(args.p))
    for line in orbits.decomposition_lines(decomp):
        print(line)
    return 0


def _cmd_sweep(args) -> int:
    from .sweep import SweepConfig, run_sweep

    workers = args.workers
    env = os.environ.get("FERMAT_LAB_THREADS")
    if env:
        workers = int(env)
    config = SweepConfig(lo=args.lo, hi=args.hi, output_path=args.out,
                         mode=args.mode, workers=workers,
                         checkpoint_path=args.checkpoint,
                         include_wieferich=not args.skip_wieferich,
                         fmt=args.fmt)
    progress = None
    if args.progress:
        def progress(done, total):
            print(f"\r{done}/{total} primes", end="", file=sys.stderr)
    records = run_sweep(config, progress)
    if args.progress:
        print(file=sys.stderr)
    print(f"{len(records)} records -> {args.out}")
    return 0


def _cmd_sample(args) -> int:
    batch = sampler.run_batch(require_prime(args.p), args.m, args.seed,
                              delta=args.delta, dedupe=args.dedupe)
    print(batch.to_json())
    if args.samples_csv:
        with open(args.samples_csv, "w") as fh:
            fh.write("ell,r,u,v,s_raw,s,theta\n")
            for s in batch.samples:
                fh.write(f"{s.ell},{s.r},{s.u},{s.v},{s.s_raw},{s.s},{s.theta}\n")
    return 0


def _cmd_stats(args) -> int:
    records = counting.read_csv(args.inp)
    out_json = {}
    if args.table in ("moments", "both"):
        report = stats.moments(records, kmax=args.kmax)
        if args.fmt == "text":
            print(stats.moments_text(report))
        else:
            out_json["moments"] = stats.moments_json(report)
    if args.table in ("poisson", "both"):
        report = stats.poisson_table(records)
        p_star, ratio = stats.n0_growth_diagnostic(records)
        if args.fmt == "text":
            if args.table == "both":
                print()
            print(stats.poisson_text(report))
            print(f"max n0 / p^(2/3) = {ratio:.4f} at p = {p_star}")
        else:
            out_json["poisson"] = stats.poisson_json(report)
            out_json["n0_growth"] = {"p": p_star, "ratio": ratio}
    if args.fmt == "json":
        print(json.dumps(out_json, indent=2))
    return 0


def _cmd_verify(args) -> int:
    from .verify import run_all

    failed = 0
    for name, ok, detail in run_all(args.max_p):
        mark = "ok" if ok else "FAIL"
        print(f"[{mark}] {name}: {detail}")
        failed += not ok
    if failed:
        print(f"{failed} families failed")
        return 2
    return 0


_COMMANDS = {
    "theta": _cmd_theta,
    "count": _cmd_count,
    "orbits": _cmd_orbits,
    "sweep": _cmd_sweep,
    "sample": _cmd_sample,
    "stats": _cmd_stats,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except OSError as exc:
        print(f"fermat-lab: i/o error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, RuntimeError) as exc:
        print(f"fermat-lab: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
