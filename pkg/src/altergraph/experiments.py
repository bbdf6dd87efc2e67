"""Experiment orchestration: CSV artifacts, manifests, figure presets.

Every preset writes plain CSV files with a '#'-prefixed schema header and
a manifest.json recording the fully resolved configuration, so a run can
be repeated bit-for-bit from its manifest.  Real numbers are serialized
with 12 significant digits; undefined values serialize as empty fields.

Figure presets:

* fig1 -- exceedance curves (share of nodes whose gain exceeds 1 per
  degree-percentile bucket) for directed inputs, in-degree semantics;
* fig2 -- the same for undirected inputs;
* fig3 -- histograms of the per-node gain (log-spaced default edges);
* fig4 -- mean gain per degree-percentile bucket;
* fig5 -- estimator-performance table over synthetic-network trials;
* table -- summary-statistics rows of the inputs.
"""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, asdict

import numpy as np

from . import gain as gain_mod
from . import stats as stats_mod
from .graph import Graph, load_edge_list
from .survey import TrialRow, protocol_trial

FIGURES = ("fig1", "fig2", "fig3", "fig4", "fig5", "table")

DEFAULT_HIST_EDGES = np.logspace(-3.0, 3.0, 61)

CURVE_SCHEMA = ["bin_low", "bin_high", "value", "count"]
GAIN_SCHEMA = ["node", "degree", "percentile_rank", "gain_mean", "gain_median"]
STATS_SCHEMA = ["name", "directed", "N", "E", "mean", "median", "std",
                "assortativity", "avg_clustering"]
TRIALS_SCHEMA = ["trial", "size", "fraction", "r_used", "g_hat", "g_true",
                 "ratio", "g_emp", "ratio_emp"]


@dataclass
class ExperimentSpec:
    figure: str
    inputs: list = field(default_factory=list)   # edge-list paths (fig1-4, table)
    directed: bool = False
    bins: int = 100
    aggregators: tuple = ("mean", "median")
    hist_edges: list | None = None               # fig3; default log-spaced
    model: str = "sw"                            # fig5
    sizes: list = field(default_factory=lambda: [1000, 2000])
    trials: int = 20
    fraction_range: tuple = (0.1, 0.2)
    nominations: int = 1
    seed: int = 0
    out_dir: str = "altergraph_out"
    threads: int = 1

    def validate(self):
        if self.figure not in FIGURES:
            raise ValueError(f"figure must be one of {FIGURES}")
        if self.figure in ("fig1", "fig2", "fig3", "fig4", "table"):
            if not self.inputs:
                raise ValueError(f"{self.figure} needs at least one input file")
        if self.figure == "fig1":
            self.directed = True
        if self.figure == "fig2":
            self.directed = False
        if self.bins < 1:
            raise ValueError("bins must be >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.sizes:
            raise ValueError("sizes must be non-empty")
        lo, hi = self.fraction_range
        if not (0.0 < lo <= hi <= 1.0):
            raise ValueError("fraction range must satisfy 0 < lo <= hi <= 1")


def fmt(x):
    """Serialize one CSV cell; None/NaN become the empty field."""
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        if np.isnan(x):
            return ""
        return format(float(x), ".12g")
    return str(x)


def write_csv(path, schema, rows):
    """Write rows (sequences of cells) under a '#'-prefixed schema header."""
    with open(path, "w", newline="") as fh:
        fh.write("# " + ",".join(schema) + "\n")
        writer = csv.writer(fh, lineterminator="\n")
        for row in rows:
            writer.writerow([fmt(c) for c in row])


def read_csv(path):
    """Parse a CSV written by :func:`write_csv` into (schema, rows of str)."""
    schema = None
    rows = []
    with open(path, newline="") as fh:
        for line in fh:
            stripped = line.strip()
            if not stripped:
                continue
            if stripped.startswith("#"):
                if schema is None:
                    schema = [c.strip() for c in stripped[1:].split(",")]
                continue
            rows.append(next(csv.reader(io.StringIO(stripped))))
    if schema is None:
        raise ValueError(f"{path}: missing '#' schema header")
    return schema, rows


def curve_rows(curve):
    for lo, hi, val, cnt in zip(curve.bin_low, curve.bin_high,
                                curve.value, curve.count):
        yield (float(lo), float(hi),
               None if np.isnan(val) else float(val), int(cnt))


def histogram_rows(hist):
    yield (None, float(hist.edges[0]), hist.underflow, hist.underflow)
    for lo, hi, cnt in zip(hist.edges[:-1], hist.edges[1:], hist.counts):
        yield (float(lo), float(hi), int(cnt), int(cnt))
    yield (float(hist.edges[-1]), None, hist.overflow, hist.overflow)


def stats_row(name, s):
    return (name, s.directed, s.n, s.e, s.mu1, s.median, s.sigma,
            s.assortativity, s.avg_clustering)


def trial_row(row: TrialRow):
    return (row.trial, row.size, row.fraction, row.r_used, row.g_hat,
            row.g_true, row.ratio, row.empirical_gain, row.empirical_ratio)


def gain_table_rows(g: Graph):
    """Per-node rows: label, degree, percentile rank, gain under each aggregator."""
    mode = "in" if g.directed else "undirected"
    deg = g.degrees(mode)
    ranks = stats_mod.percentile_ranks(deg)
    by_agg = {}
    for agg in ("mean", "median"):
        s = gain_mod.gain_summary(g, agg)
        col = np.full(g.node_count, np.nan)
        col[s.nodes] = s.gains
        by_agg[agg] = col
    for node in range(g.node_count):
        yield (g.label_of(node), int(deg[node]), float(ranks[node]),
               by_agg["mean"][node], by_agg["median"][node])


def _stem(path):
    return os.path.splitext(os.path.basename(str(path)))[0]


def _trial_args(spec):
    for size in spec.sizes:
        for t in range(spec.trials):
            yield (spec.model, size, t, spec.seed,
                   tuple(spec.fraction_range), spec.nominations)


def _run_protocol_trial(args):
    return protocol_trial(*args)


def run_protocol(spec: ExperimentSpec):
    """All fig5 trials for a spec, in deterministic (size, trial) order."""
    args = list(_trial_args(spec))
    if spec.threads > 1:
        with ProcessPoolExecutor(max_workers=spec.threads) as pool:
            rows = list(pool.map(_run_protocol_trial, args, chunksize=4))
    else:
        rows = [_run_protocol_trial(a) for a in args]
    rows.sort(key=lambda r: (r.size, r.trial))
    return rows


def manifest_dict(spec: ExperimentSpec, outputs):
    d = asdict(spec)
    d["hist_edges"] = (None if spec.hist_edges is None
                       else [float(e) for e in spec.hist_edges])
    d["aggregators"] = list(spec.aggregators)
    d["fraction_range"] = list(spec.fraction_range)
    d["sizes"] = [int(s) for s in spec.sizes]
    d["inputs"] = [str(p) for p in spec.inputs]
    d["outputs"] = [os.path.basename(p) for p in outputs]
    return d


def spec_from_manifest(path) -> ExperimentSpec:
    with open(path) as fh:
        d = json.load(fh)
    d.pop("outputs", None)
    d["aggregators"] = tuple(d.get("aggregators", ("mean", "median")))
    d["fraction_range"] = tuple(d.get("fraction_range", (0.1, 0.2)))
    return ExperimentSpec(**d)


def run_reproduce(spec: ExperimentSpec):
    """Execute a figure preset; returns the list of written file paths.

    Partial outputs are removed when any step fails.
    """
    spec.validate()
    os.makedirs(spec.out_dir, exist_ok=True)
    written = []

    def emit(name, schema, rows):
        path = os.path.join(spec.out_dir, name)
        write_csv(path, schema, rows)
        written.append(path)

    try:
        if spec.figure in ("fig1", "fig2"):
            for path in spec.inputs:
                g = load_edge_list(path, directed=spec.directed)
                mode = "in" if g.directed else "undirected"
                ranks = stats_mod.percentile_ranks(g.degrees(mode))
                for agg in spec.aggregators:
                    s = gain_mod.gain_summary(g, agg)
                    curve = gain_mod.exceedance_by_percentile(
                        s, ranks, spec.bins)
                    emit(f"{spec.figure}_{_stem(path)}_{agg}.csv",
                         CURVE_SCHEMA, curve_rows(curve))
        elif spec.figure == "fig3":
            edges = (DEFAULT_HIST_EDGES if spec.hist_edges is None
                     else np.asarray(spec.hist_edges, dtype=np.float64))
            for path in spec.inputs:
                g = load_edge_list(path, directed=spec.directed)
                for agg in spec.aggregators:
                    s = gain_mod.gain_summary(g, agg)
                    hist = gain_mod.gain_histogram(s, edges)
                    emit(f"fig3_{_stem(path)}_{agg}.csv",
                         CURVE_SCHEMA, histogram_rows(hist))
        elif spec.figure == "fig4":
            for path in spec.inputs:
                g = load_edge_list(path, directed=spec.directed)
                mode = "in" if g.directed else "undirected"
                ranks = stats_mod.percentile_ranks(g.degrees(mode))
                for agg in spec.aggregators:
                    s = gain_mod.gain_summary(g, agg)
                    curve = gain_mod.mean_gain_by_percentile(
                        s, ranks, spec.bins)
                    emit(f"fig4_{_stem(path)}_{agg}.csv",
                         CURVE_SCHEMA, curve_rows(curve))
        elif spec.figure == "fig5":
            rows = run_protocol(spec)
            emit(f"fig5_{spec.model}.csv", TRIALS_SCHEMA,
                 (trial_row(r) for r in rows))
        else:  # table
            rows = []
            for path in spec.inputs:
                g = load_edge_list(path, directed=spec.directed)
                rows.append(stats_row(_stem(path), stats_mod.summary(g)))
            emit("table.csv", STATS_SCHEMA, rows)

        manifest_path = os.path.join(spec.out_dir, "manifest.json")
        with open(manifest_path, "w") as fh:
            json.dump(manifest_dict(spec, written), fh, indent=2, sort_keys=True)
            fh.write("\n")
        written.append(manifest_path)
    except BaseException:
        for path in written:
            try:
                os.unlink(path)
            except OSError:
                pass
        raise
    return written
