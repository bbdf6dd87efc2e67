"""Command-line interface.

Subcommands: stats, gain, generate, estimate, reproduce.  Exit codes:
0 success, 1 usage error, 2 data error (unreadable/malformed input),
3 internal error.  --threads falls back to the ALTERGRAPH_THREADS
environment variable, then to 1.
"""
from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import experiments
from .experiments import (ExperimentSpec, GAIN_SCHEMA, STATS_SCHEMA,
                          TRIALS_SCHEMA, fmt, gain_table_rows, run_reproduce,
                          spec_from_manifest, stats_row, trial_row)
from .generators import MODELS, GeneratorConfig, generate
from .graph import EdgeListError, load_edge_list, write_edge_list
from .stats import summary
from .survey import run_trial


class _UsageExit(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageExit(message)


def _default_threads():
    env = os.environ.get("ALTERGRAPH_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _common_flags(parser):
    parser.add_argument("--seed", type=int, default=0,
                        help="master seed for anything randomized")
    parser.add_argument("--threads", type=int, default=_default_threads(),
                        help="worker processes for independent trials")
    parser.add_argument("--out", default="-",
                        help="output file, or directory for reproduce")


def build_parser():
    top = _Parser(prog="altergraph",
                  description="Alter-sampling gain analysis on graphs")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[], help="summary statistics rows")
    p.add_argument("--input", nargs="+", required=True)
    p.add_argument("--directed", action="store_true")
    _common_flags(p)

    p = sub.add_parser("gain", help="per-node gain table")
    p.add_argument("--input", required=True)
    p.add_argument("--directed", action="store_true")
    _common_flags(p)

    p = sub.add_parser("generate", help="emit a synthetic graph edge list")
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--m", type=int)
    p.add_argument("--pt", type=float)
    p.add_argument("--mu", type=float)
    _common_flags(p)

    p = sub.add_parser("estimate", help="survey-based gain estimate trials")
    p.add_argument("--input", required=True)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--fraction", type=float, default=None,
                   help="respondent fraction; default draws from [0.1, 0.2]")
    p.add_argument("--nominations", type=int, default=1)
    p.add_argument("--trials", type=int, default=1)
    _common_flags(p)

    p = sub.add_parser("reproduce", help="run a figure preset to CSV files")
    p.add_argument("--figure", choices=experiments.FIGURES)
    p.add_argument("--manifest", help="re-run from a recorded manifest")
    p.add_argument("--input", nargs="*", default=[])
    p.add_argument("--directed", action="store_true")
    p.add_argument("--bins", type=int, default=100)
    p.add_argument("--model", choices=MODELS, default="sw")
    p.add_argument("--sizes", default="1000,2000",
                   help="comma-separated sizes for fig5")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--fraction-range", default="0.1,0.2")
    p.add_argument("--nominations", type=int, default=1)
    _common_flags(p)
    return top


def _open_out(out):
    if out in ("-", ""):
        return sys.stdout, False
    return open(out, "w", newline=""), True


def _write_rows(out, schema, rows):
    fh, close = _open_out(out)
    try:
        fh.write("# " + ",".join(schema) + "\n")
        for row in rows:
            fh.write(",".join(fmt(c) for c in row) + "\n")
    finally:
        if close:
            fh.close()


def _cmd_stats(args):
    rows = []
    for path in args.input:
        g = load_edge_list(path, directed=args.directed)
        rows.append(stats_row(experiments._stem(path), summary(g)))
    _write_rows(args.out, STATS_SCHEMA, rows)
    return 0


def _cmd_gain(args):
    g = load_edge_list(args.input, directed=args.directed)
    _write_rows(args.out, GAIN_SCHEMA, gain_table_rows(g))
    return 0


def _cmd_generate(args):
    config = GeneratorConfig(model=args.model, n=args.n, b=args.b, p=args.p,
                             m=args.m, p_t=args.pt, mu=args.mu, seed=args.seed)
    missing = {
        "sw": [f for f in ("b", "p") if getattr(config, f) is None],
        "pa": [f for f in ("m",) if getattr(config, f) is None],
        "hk": [f for f in ("m", "p_t") if getattr(config, f) is None],
        "ke": [f for f in ("m", "mu") if getattr(config, f) is None],
    }[args.model]
    if missing:
        raise _UsageExit(f"model {args.model} needs --" + ", --".join(
            f.replace("p_t", "pt") for f in missing))
    g = generate(config)
    fh, close = _open_out(args.out)
    try:
        write_edge_list(g, fh)
    finally:
        if close:
            fh.close()
    return 0


def _cmd_estimate(args):
    g = load_edge_list(args.input, directed=args.directed)
    rows = []
    for t in range(args.trials):
        rng = np.random.default_rng(
            np.random.SeedSequence([args.seed, g.node_count, t]))
        fraction = (args.fraction if args.fraction is not None
                    else float(rng.uniform(0.1, 0.2)))
        res = run_trial(g, fraction, args.nominations, rng)
        rows.append((t, g.node_count, fraction, res.r_used, res.g_hat,
                     res.g_true, res.ratio, res.empirical_gain,
                     res.empirical_ratio))
    _write_rows(args.out, TRIALS_SCHEMA, rows)
    return 0


def _cmd_reproduce(args):
    if args.manifest:
        spec = spec_from_manifest(args.manifest)
        if args.out != "-":
            spec.out_dir = args.out
        spec.threads = args.threads
    else:
        if not args.figure:
            raise _UsageExit("reproduce needs --figure or --manifest")
        try:
            sizes = [int(s) for s in args.sizes.split(",") if s]
            lo, hi = (float(x) for x in args.fraction_range.split(","))
        except ValueError as exc:
            raise _UsageExit(str(exc))
        spec = ExperimentSpec(
            figure=args.figure, inputs=list(args.input),
            directed=args.directed, bins=args.bins, model=args.model,
            sizes=sizes, trials=args.trials, fraction_range=(lo, hi),
            nominations=args.nominations, seed=args.seed,
            out_dir=args.out if args.out != "-" else "altergraph_out",
            threads=args.threads,
        )
    written = run_reproduce(spec)
    for path in written:
        print(path)
    return 0


_COMMANDS = {
    "stats": _cmd_stats,
    "gain": _cmd_gain,
    "generate": _cmd_generate,
    "estimate": _cmd_estimate,
    "reproduce": _cmd_reproduce,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageExit as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        if isinstance(exc, EdgeListError):
            print(f"data error: {exc}", file=sys.stderr)
            return 2
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except SystemExit:
        raise
    except Exception as exc:  # pragma: no cover - safety net
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
