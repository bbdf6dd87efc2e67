"""plots render --figure figN --in dir/ --out figN.png

Picks up every CSV in the input directory whose name starts with the
figure id (or takes explicit --csv paths) and renders one image.
"""
from __future__ import annotations

import argparse
import glob
import os
import sys

from .render import FIGURES, FigureJob, render
from .schema import SchemaError


def build_parser():
    parser = argparse.ArgumentParser(prog="plots")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("render", help="render one figure from CSV files")
    p.add_argument("--figure", choices=FIGURES, required=True)
    p.add_argument("--in", dest="in_dir",
                   help="directory holding the figure's CSV files")
    p.add_argument("--csv", nargs="*", default=[],
                   help="explicit CSV paths instead of --in")
    p.add_argument("--out", required=True, help="output image path")
    p.add_argument("--logy", action="store_true")
    p.add_argument("--linearx", action="store_true",
                   help="linear x axis for histograms")
    p.add_argument("--title", default="")
    return parser


def main(argv=None):
    import matplotlib
    matplotlib.use("Agg")
    args = build_parser().parse_args(argv)
    inputs = list(args.csv)
    if args.in_dir:
        inputs += sorted(glob.glob(os.path.join(args.in_dir,
                                                f"{args.figure}_*.csv")))
    if not inputs:
        print("no input CSVs found", file=sys.stderr)
        return 1
    job = FigureJob(figure=args.figure, inputs=inputs, output=args.out,
                    logx=False if args.linearx else None, logy=args.logy,
                    title=args.title)
    try:
        result = render(job)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 2
    print(f"{result.path}: {len(result.series)} series")
    return 0


if __name__ == "__main__":
    sys.exit(main())
