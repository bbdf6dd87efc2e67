"""Degree-distribution moments, summary statistics and percentile ranks.

Everything here is a pure function of immutable inputs.  The moments feed
the closed-form sampling gain (second raw moment times mean reciprocal
degree over the mean), so the exact conventions matter:

* ``mu1``, ``mu2``, ``sigma`` and ``median`` run over all nodes;
* ``muh`` (mean reciprocal degree) runs over positive-degree nodes only,
  with the zero-degree count reported separately;
* assortativity is the Pearson correlation of end-point degrees with each
  undirected edge counted in both orientations, and is *undefined* (None)
  on degree-regular graphs rather than coerced to 0.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import DegreeSequence, Graph


@dataclass(frozen=True)
class DegreeMoments:
    mu1: float        # mean degree
    mu2: float        # second raw moment
    muh: float        # mean reciprocal degree, positive-degree nodes only
    sigma: float      # population standard deviation
    median: float
    n_zero: int       # nodes with degree 0 (excluded from muh)


@dataclass(frozen=True)
class NetworkStats:
    n: int
    e: int
    directed: bool
    mu1: float
    median: float
    sigma: float
    assortativity: float | None   # undefined on degree-regular graphs
    avg_clustering: float | None  # undirected graphs only


def _values(seq):
    if isinstance(seq, DegreeSequence):
        return np.asarray(seq.values)
    return np.asarray(seq)


def moments(seq) -> DegreeMoments:
    """Degree moments of a sequence (DegreeSequence or array-like).

    Raises ValueError on an empty sequence or when every degree is zero
    (the mean reciprocal degree needs at least one positive degree).
    """
    k = _values(seq).astype(np.float64)
    if k.size == 0:
        raise ValueError("empty degree sequence")
    positive = k[k > 0]
    if positive.size == 0:
        raise ValueError("all degrees are zero; mean reciprocal degree undefined")
    mu1 = float(np.mean(k))
    mu2 = float(np.mean(k * k))
    return DegreeMoments(
        mu1=mu1,
        mu2=mu2,
        muh=float(np.mean(1.0 / positive)),
        sigma=float(np.sqrt(max(mu2 - mu1 * mu1, 0.0))),
        median=float(np.median(k)),
        n_zero=int(np.sum(k == 0)),
    )


def formula_gain(seq) -> float:
    """Closed-form expected sampling gain mu2 * muh / mu1 of a degree sequence."""
    m = moments(seq)
    return m.mu2 * m.muh / m.mu1


def assortativity(g: Graph):
    """Degree assortativity of an undirected graph.

    Pearson correlation of the degrees at the two ends of each edge, with
    every edge counted in both orientations.  Returns None when the
    end-point degree variance is zero (regular and complete graphs).
    """
    if g.directed:
        raise ValueError("assortativity is defined on undirected graphs only")
    if g.edge_count < 1:
        raise ValueError("assortativity needs at least one edge")
    deg = g.degrees("undirected").astype(np.float64)
    e = g.edges()
    x = np.concatenate((deg[e[:, 0]], deg[e[:, 1]]))
    y = np.concatenate((deg[e[:, 1]], deg[e[:, 0]]))
    mx = x.mean()
    var = np.mean(x * x) - mx * mx
    if var <= 0.0:
        return None
    cov = np.mean(x * y) - mx * mx  # x and y share the same marginal
    return float(cov / var)


def avg_clustering(g: Graph, block=2048) -> float:
    """Average local clustering coefficient of an undirected graph.

    Nodes of degree < 2 contribute 0.  Triangles are counted through the
    sparse product (A @ A) * A taken in row blocks to bound memory.
    """
    if g.directed:
        raise ValueError("avg_clustering is defined on undirected graphs only")
    n = g.node_count
    if n == 0:
        raise ValueError("empty graph")
    a = g.adjacency_csr()
    deg = g.degrees("undirected").astype(np.float64)
    wedges = np.zeros(n)
    for start in range(0, n, block):
        stop = min(start + block, n)
        sub = a[start:stop]
        # row u of (A@A).multiply(A) sums ordered neighbor pairs of u that
        # are themselves adjacent, i.e. twice the triangle count at u
        wedges[start:stop] = np.asarray(
            (sub @ a).multiply(sub).sum(axis=1)).ravel()
    denom = deg * (deg - 1.0)
    local = np.divide(wedges, denom, out=np.zeros(n), where=denom > 0)
    return float(local.mean())


def percentile_ranks(seq) -> np.ndarray:
    """Midrank degree percentiles in [0, 100).

    rank(x) = 100 * (#{k < k_x} + 0.5 * #{k == k_x}) / N, so tied degrees
    share one rank and ranks are non-decreasing in degree.
    """
    k = _values(seq)
    if k.size == 0:
        raise ValueError("empty degree sequence")
    sorted_k = np.sort(k)
    less = np.searchsorted(sorted_k, k, side="left")
    less_eq = np.searchsorted(sorted_k, k, side="right")
    return 100.0 * (less + 0.5 * (less_eq - less)) / k.size


def summary(g: Graph) -> NetworkStats:
    """Summary-statistics row for a graph.

    Directed graphs report in-degree statistics (mean in-degree equals
    mean out-degree) and leave assortativity/clustering unset; undirected
    graphs report the full row.
    """
    mode = "in" if g.directed else "undirected"
    k = g.degrees(mode).astype(np.float64)
    mu1 = float(k.mean())
    mu2 = float(np.mean(k * k))
    sigma = float(np.sqrt(max(mu2 - mu1 * mu1, 0.0)))
    if g.directed:
        r = None
        cbar = None
    else:
        r = assortativity(g) if g.edge_count >= 1 else None
        cbar = avg_clustering(g)
    return NetworkStats(
        n=g.node_count,
        e=g.edge_count,
        directed=g.directed,
        mu1=mu1,
        median=float(np.median(k)),
        sigma=sigma,
        assortativity=r,
        avg_clustering=cbar,
    )
