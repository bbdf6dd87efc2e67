"""Figure rendering from experiment CSVs.

One job renders one image.  Multiple input CSVs overlay as labeled
series (file stems become legend labels).  Undefined curve buckets stay
gaps; they are never interpolated.  Gain histograms default to a
logarithmic x axis because the distributions are heavily skewed.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .schema import SchemaError, load_curve, load_trials

FIGURES = ("fig1", "fig2", "fig3", "fig4", "fig5")


@dataclass
class FigureJob:
    figure: str
    inputs: list
    output: str
    logx: bool | None = None     # default depends on figure
    logy: bool = False
    title: str = ""
    labels: dict = field(default_factory=dict)  # input path -> series label


@dataclass(frozen=True)
class RenderResult:
    path: str
    series: tuple   # one label per plotted series


def _stem(path):
    return os.path.splitext(os.path.basename(str(path)))[0]


def _axes():
    import matplotlib
    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt
    fig, ax = plt.subplots(figsize=(7, 4.5))
    return plt, fig, ax


def _finish(plt, fig, ax, job, series):
    if series and len(series) > 1:
        ax.legend(fontsize=8)
    if job.title:
        ax.set_title(job.title)
    fig.tight_layout()
    fig.savefig(job.output, dpi=150)
    plt.close(fig)
    return RenderResult(path=job.output, series=tuple(series))


def _label(job, path):
    return job.labels.get(path, _stem(path))


def _render_percentile_curves(job, ylabel):
    plt, fig, ax = _axes()
    series = []
    for path in job.inputs:
        rows = load_curve(path)
        bounded = [r for r in rows if r[0] is not None and r[1] is not None]
        if not bounded:
            raise SchemaError(f"{path}: no bounded buckets", path=path)
        x = np.array([(r[0] + r[1]) / 2 for r in bounded])
        y = np.array([np.nan if r[2] is None else r[2] for r in bounded])
        ax.plot(x, y, marker=".", lw=1.2, label=_label(job, path))
        series.append(_label(job, path))
    ax.set_xlabel("degree percentile rank")
    ax.set_ylabel(ylabel)
    if job.logy:
        ax.set_yscale("log")
    return _finish(plt, fig, ax, job, series)


def _render_histograms(job):
    plt, fig, ax = _axes()
    logx = True if job.logx is None else job.logx
    series = []
    for path in job.inputs:
        rows = load_curve(path)
        bounded = [r for r in rows if r[0] is not None and r[1] is not None]
        if not bounded:
            raise SchemaError(f"{path}: no bounded bins", path=path)
        lo = np.array([r[0] for r in bounded])
        hi = np.array([r[1] for r in bounded])
        cnt = np.array([0.0 if r[3] is None else r[3] for r in bounded])
        if logx:
            keep = lo > 0
            lo, hi, cnt = lo[keep], hi[keep], cnt[keep]
        ax.bar(lo, cnt, width=hi - lo, align="edge", alpha=0.55,
               label=_label(job, path))
        series.append(_label(job, path))
    if logx:
        ax.set_xscale("log")
    ax.set_xlabel("per-node gain")
    ax.set_ylabel("nodes")
    if job.logy:
        ax.set_yscale("log")
    return _finish(plt, fig, ax, job, series)


def _render_trials(job):
    plt, fig, ax = _axes()
    series = []
    n_inputs = len(job.inputs)
    for i, path in enumerate(job.inputs):
        rows = load_trials(path)
        sizes = sorted({int(r["size"]) for r in rows})
        data = [[r["ratio"] for r in rows if int(r["size"]) == s]
                for s in sizes]
        width = 0.8 / n_inputs
        positions = [k + 1 + (i - (n_inputs - 1) / 2) * width
                     for k in range(len(sizes))]
        box = ax.boxplot(data, positions=positions, widths=width * 0.85,
                         patch_artist=True)
        color = f"C{i}"
        for patch in box["boxes"]:
            patch.set_facecolor(color)
            patch.set_alpha(0.6)
        ax.plot([], [], color=color, label=_label(job, path))
        series.append(_label(job, path))
        ax.set_xticks(range(1, len(sizes) + 1))
        ax.set_xticklabels([str(s) for s in sizes])
    ax.axhline(1.0, color="gray", lw=1.0, ls="--")
    ax.set_xlabel("network size")
    ax.set_ylabel("estimated / true gain")
    return _finish(plt, fig, ax, job, series)


def render(job: FigureJob) -> RenderResult:
    """Render one figure job; returns the output path and series labels."""
    if job.figure not in FIGURES:
        raise ValueError(f"figure must be one of {FIGURES}")
    if not job.inputs:
        raise ValueError("job has no input CSVs")
    for path in job.inputs:
        if not os.path.exists(path):
            raise SchemaError(f"{path}: no such input", path=path)
    if job.figure in ("fig1", "fig2"):
        return _render_percentile_curves(job, "share of nodes with gain > 1")
    if job.figure == "fig4":
        return _render_percentile_curves(job, "mean gain")
    if job.figure == "fig3":
        return _render_histograms(job)
    return _render_trials(job)
