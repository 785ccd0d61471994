"""Command-line interface: fit one clustering run, scan a vigilance grid,
or generate a synthetic dataset.

Exit codes: 0 success, 1 data/runtime error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys

import numpy as np

from . import bench
from .core import HyperParams
from .engine import run_fuzzy_art, run_ir_art
from .metrics import scores
from .preprocess import DataFormatError, load_csv, prepare_inputs


class UsageError(Exception):
    pass


def _check_range(name, value, lo, hi, lo_open=False, hi_open=False):
    bad = value < lo or value > hi
    bad = bad or (lo_open and value == lo) or (hi_open and value == hi)
    if bad:
        left = "(" if lo_open else "["
        right = ")" if hi_open else "]"
        raise UsageError(f"--{name} must be in {left}{lo}, {hi}{right}, got {value}")


def _hyperparams(args, rho0=None) -> HyperParams:
    _check_range("alpha", args.alpha, 0.0, float("inf"), lo_open=True)
    _check_range("beta", args.beta, 0.0, 1.0)
    _check_range("tau", args.tau, 0.0, 1.0, hi_open=True)
    if args.max_iter < 1:
        raise UsageError(f"--max-iter must be >= 1, got {args.max_iter}")
    if rho0 is not None:
        _check_range("rho", rho0, 0.0, 1.0)
    return HyperParams(
        alpha=args.alpha,
        beta=args.beta,
        rho0=0.0 if rho0 is None else rho0,
        tau=args.tau,
        t_max=args.max_iter,
    )


def _add_engine_flags(parser):
    parser.add_argument("--alpha", type=float, default=0.001, help="choice parameter (default 0.001)")
    parser.add_argument("--beta", type=float, default=0.5, help="learning rate (default 0.5)")
    parser.add_argument("--tau", type=float, default=0.01, help="vigilance expansion rate (default 0.01)")
    parser.add_argument("--max-iter", type=int, default=50, help="maximum full passes (default 50)")
    parser.add_argument(
        "--engine",
        choices=[bench.IR_ART, bench.FUZZY_ART],
        default=bench.IR_ART,
        help="clustering engine (default ir-art)",
    )


def _add_label_flags(parser):
    parser.add_argument("--labeled", action="store_true", help="treat one column as ground-truth labels")
    parser.add_argument("--label-col", default=None, help="label column name or index (default: last column)")


def cmd_fit(args) -> int:
    params = _hyperparams(args, rho0=args.rho)
    raw = load_csv(args.input, labeled=args.labeled or args.label_col is not None, label_col=args.label_col)
    if args.seed is not None:
        raw = bench.permute(raw, args.seed)
    coded = prepare_inputs(raw)
    run = run_ir_art if args.engine == bench.IR_ART else run_fuzzy_art
    model, assignment, trace = run(coded, params)

    print(f"clusters: {len(model)}")
    print(f"iterations: {trace.iterations}")
    print(f"termination: {trace.termination}")
    if raw.labels is not None:
        nmi, ari = scores(raw.labels, assignment)
        print(f"NMI: {nmi:.6f}")
        print(f"ARI: {ari:.6f}")
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["sample_index", "cluster_id"])
            for i, cid in enumerate(assignment):
                writer.writerow([i, int(cid)])
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            fh.write(trace.to_jsonl())
    return 0


def cmd_scan(args) -> int:
    params = _hyperparams(args)
    for name, value in (("rho-start", args.rho_start), ("rho-end", args.rho_end)):
        _check_range(name, value, 0.0, 1.0)
    if args.rho_step <= 0:
        raise UsageError(f"--rho-step must be > 0, got {args.rho_step}")
    if args.orders < 1:
        raise UsageError(f"--orders must be >= 1, got {args.orders}")
    raw = load_csv(args.input, labeled=True, label_col=args.label_col)
    if raw.labels is None:
        print("error: scan needs ground-truth labels (external indices)", file=sys.stderr)
        return 1
    config = bench.ScanConfig(
        rho_start=args.rho_start,
        rho_end=args.rho_end,
        rho_step=args.rho_step,
        orders=args.orders,
        base_seed=args.seed,
        params=params,
        engine=args.engine,
        workers=args.workers,
    )
    report = bench.run_scan(raw, config)
    if args.out:
        bench.emit_report(report, args.format, args.out)
    for key, value in report.summary.items():
        print(f"{key}: {value:.6f}")
    return 0


def cmd_gen(args) -> int:
    if args.n < 4:
        raise UsageError(f"--n must be >= 4, got {args.n}")
    raw = bench.generate_synthetic(args.shape, args.n, args.seed)
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "y", "label"])
        for row, label in zip(raw.data, raw.labels):
            writer.writerow([f"{row[0]:.12g}", f"{row[1]:.12g}", int(label)])
    print(f"wrote {raw.n_samples} samples to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="irart", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    fit = sub.add_parser("fit", help="run one clustering execution on a CSV file")
    fit.add_argument("input", help="input CSV path")
    fit.add_argument("--rho", type=float, default=0.5, help="initial vigilance (default 0.5)")
    _add_engine_flags(fit)
    _add_label_flags(fit)
    fit.add_argument("--seed", type=int, default=None, help="shuffle the presentation order with this seed")
    fit.add_argument("--out", default=None, help="write assignment CSV (sample_index,cluster_id)")
    fit.add_argument("--trace", default=None, help="write per-iteration trace as JSON lines")
    fit.set_defaults(func=cmd_fit)

    scan = sub.add_parser("scan", help="vigilance grid scan with random presentation orders")
    scan.add_argument("input", help="labeled input CSV path")
    scan.add_argument("--rho-start", type=float, default=0.05)
    scan.add_argument("--rho-end", type=float, default=0.95)
    scan.add_argument("--rho-step", type=float, default=0.01)
    scan.add_argument("--orders", type=int, default=10, help="random presentation orders per grid point (default 10)")
    scan.add_argument("--seed", type=int, default=0, help="base seed for order generation (default 0)")
    _add_engine_flags(scan)
    scan.add_argument("--label-col", default=None, help="label column name or index (default: last column)")
    scan.add_argument(
        "--workers",
        type=int,
        default=int(os.environ.get("IRART_WORKERS", "1")),
        help="parallel worker processes (default $IRART_WORKERS or 1)",
    )
    scan.add_argument("--out", default=None, help="report output path")
    scan.add_argument("--format", choices=["csv", "json"], default="csv", help="report format (default csv)")
    scan.set_defaults(func=cmd_scan)

    gen = sub.add_parser("gen", help="generate a labeled synthetic dataset CSV")
    gen.add_argument("--shape", choices=[bench.TWO_GAUSSIANS, bench.GRID_BLOBS], default=bench.TWO_GAUSSIANS)
    gen.add_argument("--n", type=int, default=200, help="sample count (default 200)")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("out", help="output CSV path")
    gen.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DataFormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
