"""Per-node sampling gain and its distribution over degree percentiles.

The gain of a node x is the aggregated (mean or median) degree of its
alters divided by x's own degree; values above 1 mean a random alter of x
beats picking x directly.  On undirected graphs the alters are the
neighbors and all degrees are plain degrees.  On directed graphs an alter
of x is an out-neighbor (someone x knows), influence is measured by the
alter's in-degree, and x's own degree is its in-degree; the gain is
undefined for nodes with no alters or zero in-degree, and such nodes are
counted, never silently dropped.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .graph import Graph
from .stats import moments


class GainRecord(NamedTuple):
    node: int
    own_degree: int
    gain: float
    aggregator: str


@dataclass(frozen=True)
class GainSummary:
    """All defined per-node gains of one graph under one aggregator."""

    aggregator: str
    nodes: np.ndarray       # ids with defined gain
    degrees: np.ndarray     # own degree of those nodes (in-degree if directed)
    gains: np.ndarray
    excluded: int           # nodes with undefined gain
    empirical_mean_gain: float
    formula_gain: float
    node_count: int         # N of the source graph

    def records(self):
        for node, deg, gx in zip(self.nodes, self.degrees, self.gains):
            yield GainRecord(int(node), int(deg), float(gx), self.aggregator)

    def __len__(self):
        return len(self.nodes)


@dataclass(frozen=True)
class Curve:
    """Per-bucket values over equal-width percentile-rank buckets.

    ``value`` is NaN for buckets containing no defined-gain node.
    """

    bin_low: np.ndarray
    bin_high: np.ndarray
    value: np.ndarray
    count: np.ndarray


@dataclass(frozen=True)
class GainHistogram:
    edges: np.ndarray
    counts: np.ndarray      # per half-open bin [e_i, e_{i+1})
    underflow: int
    overflow: int           # includes values at or above the last edge


_AGGREGATORS = ("mean", "median")


def _check_aggregator(aggregator):
    if aggregator not in _AGGREGATORS:
        raise ValueError(f"aggregator must be one of {_AGGREGATORS}")


def _alter_setup(g: Graph):
    """(indptr, indices, alter_degree, own_degree) for gain computation."""
    if g.directed:
        indptr, indices = g.adjacency_arrays("out")
        influence = g.degrees("in")
        own = influence
    else:
        indptr, indices = g.adjacency_arrays("undirected")
        influence = g.degrees("undirected")
        own = influence
    return indptr, indices, influence, own


def node_gain(g: Graph, node, aggregator="mean"):
    """Gain of a single node, or None where it is undefined."""
    _check_aggregator(aggregator)
    if not 0 <= node < g.node_count:
        raise ValueError(f"node {node} out of range [0, {g.node_count})")
    if g.directed:
        alters = g.neighbors(node, "out")
        own = int(g.degrees("in")[node])
        alter_deg = g.degrees("in")[alters]
    else:
        alters = g.neighbors(node, "undirected")
        own = int(g.degrees("undirected")[node])
        alter_deg = g.degrees("undirected")[alters]
    if len(alters) == 0 or own == 0:
        return None
    agg = np.mean(alter_deg) if aggregator == "mean" else np.median(alter_deg)
    return float(agg) / own


def _segment_means(indptr, entries, n):
    counts = np.diff(indptr)
    seg = np.repeat(np.arange(n), counts)
    sums = np.bincount(seg, weights=entries, minlength=n)
    out = np.full(n, np.nan)
    np.divide(sums, counts, out=out, where=counts > 0)
    return out


def _segment_medians(indptr, entries, n):
    counts = np.diff(indptr)
    seg = np.repeat(np.arange(n), counts)
    order = np.lexsort((entries, seg))
    sorted_entries = entries[order]
    out = np.full(n, np.nan)
    occupied = counts > 0
    starts = indptr[:-1][occupied]
    length = counts[occupied]
    lo = sorted_entries[starts + (length - 1) // 2]
    hi = sorted_entries[starts + length // 2]
    out[occupied] = 0.5 * (lo + hi)
    return out


def gain_summary(g: Graph, aggregator="mean") -> GainSummary:
    """Per-node gains for the whole graph plus the closed-form network gain.

    ``empirical_mean_gain`` is the mean gain over nodes where it is
    defined; ``formula_gain`` is mu2 * muh / mu1 of the relevant degree
    sequence (plain degrees, or in-degrees for directed graphs).  Raises
    ValueError when no node has a defined gain.
    """
    _check_aggregator(aggregator)
    n = g.node_count
    indptr, indices, influence, own = _alter_setup(g)
    entries = influence[indices].astype(np.float64)
    if aggregator == "mean":
        agg = _segment_means(indptr, entries, n)
    else:
        agg = _segment_medians(indptr, entries, n)
    defined = ~np.isnan(agg) & (own > 0)
    if not defined.any():
        raise ValueError("gain is undefined for every node")
    nodes = np.nonzero(defined)[0]
    gains = agg[defined] / own[defined]
    gains.flags.writeable = False
    return GainSummary(
        aggregator=aggregator,
        nodes=nodes,
        degrees=own[defined].copy(),
        gains=gains,
        excluded=int(n - len(nodes)),
        empirical_mean_gain=float(gains.mean()),
        formula_gain=float(_formula_gain_of(own)),
        node_count=n,
    )


def _formula_gain_of(degree_values):
    m = moments(degree_values)
    return m.mu2 * m.muh / m.mu1


def _rank_buckets(summary: GainSummary, ranks, bins):
    if bins < 1:
        raise ValueError("bins must be >= 1")
    ranks = np.asarray(ranks, dtype=np.float64)
    if len(ranks) != summary.node_count:
        raise ValueError("ranks and summary come from different graphs")
    r = ranks[summary.nodes]
    idx = np.minimum((r * bins / 100.0).astype(np.int64), bins - 1)
    counts = np.bincount(idx, minlength=bins)
    edges = 100.0 * np.arange(bins + 1) / bins
    return idx, counts, edges


def _bucket_curve(summary, ranks, bins, per_record):
    idx, counts, edges = _rank_buckets(summary, ranks, bins)
    sums = np.bincount(idx, weights=per_record, minlength=bins)
    value = np.full(bins, np.nan)
    np.divide(sums, counts, out=value, where=counts > 0)
    return Curve(bin_low=edges[:-1], bin_high=edges[1:],
                 value=value, count=counts)


def exceedance_by_percentile(summary: GainSummary, ranks, bins=100) -> Curve:
    """Fraction of defined-gain nodes with gain > 1 per rank bucket.

    Buckets are ``bins`` equal-width intervals over [0, 100); buckets
    without a defined-gain node get a NaN value (a gap, not a zero).
    """
    return _bucket_curve(summary, ranks, bins,
                         (summary.gains > 1.0).astype(np.float64))


def mean_gain_by_percentile(summary: GainSummary, ranks, bins=100) -> Curve:
    """Mean gain of defined-gain nodes per rank bucket."""
    return _bucket_curve(summary, ranks, bins, summary.gains)


def gain_histogram(summary: GainSummary, bin_edges) -> GainHistogram:
    """Counts of per-node gains per half-open bin [e_i, e_{i+1}).

    Values below the first edge or at/above the last are tallied as
    underflow/overflow instead of being clipped into the end bins.
    """
    edges = np.asarray(bin_edges, dtype=np.float64)
    if edges.ndim != 1 or len(edges) < 2:
        raise ValueError("need at least 2 bin edges")
    if not np.all(np.diff(edges) > 0):
        raise ValueError("bin edges must be strictly ascending")
    idx = np.searchsorted(edges, summary.gains, side="right") - 1
    nbins = len(edges) - 1
    under = int(np.sum(idx < 0))
    over = int(np.sum(idx >= nbins))
    inside = idx[(idx >= 0) & (idx < nbins)]
    counts = np.bincount(inside, minlength=nbins)
    return GainHistogram(edges=edges, counts=counts,
                         underflow=under, overflow=over)
