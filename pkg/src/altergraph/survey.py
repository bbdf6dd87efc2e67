"""Interview simulation and the survey-only estimate of the sampling gain.

The field procedure this mirrors: interview a random fraction of the
population, ask each respondent how many people they know and for the
names of a few of them.  The estimator uses only the reported degrees

    g_hat = (sum k_i^2) * (sum 1/k_i) / (r * sum k_i)

over the r respondents with a positive reported degree; respondents who
know nobody are recorded but cannot enter the sums.  With a full census
and minimum degree 1 this reproduces the closed-form network gain exactly.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gain import gain_summary
from .graph import Graph
from .generators import GeneratorConfig, generate, sample_config
from .stats import formula_gain


@dataclass(frozen=True)
class Survey:
    respondents: np.ndarray        # distinct node ids
    reported_degrees: np.ndarray   # true degree (out-degree when directed)
    nominations: list              # per respondent, array of alter ids
    fraction: float


@dataclass(frozen=True)
class EstimatorResult:
    g_hat: float
    g_true: float        # closed-form gain of the full graph
    ratio: float
    r_used: int          # respondents with positive reported degree
    empirical_gain: float | None = None   # mean per-node gain of the graph
    empirical_ratio: float | None = None


@dataclass(frozen=True)
class TrialRow:
    model: str
    size: int
    trial: int
    fraction: float
    r_used: int
    g_hat: float
    g_true: float
    ratio: float
    empirical_gain: float
    empirical_ratio: float


def draw_respondents(g: Graph, fraction, rng) -> np.ndarray:
    """floor(fraction * N) distinct nodes sampled uniformly."""
    if not 0.0 < fraction <= 1.0:
        raise ValueError("fraction must be in (0, 1]")
    count = int(np.floor(fraction * g.node_count))
    if count < 1:
        raise ValueError("fraction * N must be at least 1")
    return np.sort(rng.choice(g.node_count, size=count, replace=False))


def interview(g: Graph, respondents, nominations_per_respondent=1,
              rng=None) -> Survey:
    """Collect degree reports and alter nominations from the respondents.

    Every respondent reports their true degree (out-degree on directed
    graphs: the people they know) and nominates up to
    ``nominations_per_respondent`` distinct alters uniformly at random
    from their neighbor (or out-neighbor) list; a degree-0 respondent
    reports 0 and nominates nobody.
    """
    if rng is None:
        rng = np.random.default_rng()
    if nominations_per_respondent < 1:
        raise ValueError("nominations_per_respondent must be >= 1")
    respondents = np.asarray(respondents, dtype=np.int64)
    if len(respondents) and (respondents.min() < 0
                             or respondents.max() >= g.node_count):
        raise ValueError("respondent id out of range")
    direction = "out" if g.directed else "undirected"
    reported = np.empty(len(respondents), dtype=np.int64)
    noms = []
    for i, node in enumerate(respondents):
        alters = g.neighbors(int(node), direction)
        reported[i] = len(alters)
        if len(alters) == 0:
            noms.append(np.empty(0, dtype=np.int64))
        elif nominations_per_respondent == 1:
            noms.append(alters[[rng.integers(0, len(alters))]])
        else:
            take = min(nominations_per_respondent, len(alters))
            noms.append(rng.choice(alters, size=take, replace=False))
    return Survey(respondents=respondents, reported_degrees=reported,
                  nominations=noms,
                  fraction=len(respondents) / g.node_count)


def estimate_gain(survey: Survey) -> float:
    """Gain estimate from the reported degrees alone.

    Respondents with reported degree 0 are excluded from the sums and
    from r; raises ValueError when nobody reported a positive degree.
    """
    k = survey.reported_degrees[survey.reported_degrees >= 1].astype(np.float64)
    if k.size == 0:
        raise ValueError("no respondent with positive reported degree")
    r = k.size
    return float(np.sum(k * k) * np.sum(1.0 / k) / (r * np.sum(k)))


def respondents_used(survey: Survey) -> int:
    return int(np.sum(survey.reported_degrees >= 1))


def run_trial(g: Graph, fraction, nominations, rng) -> EstimatorResult:
    """One survey on ``g``: draw respondents, interview, estimate.

    ``g_true`` is the closed-form gain of the full degree sequence
    (in-degrees on directed graphs); the empirical mean per-node gain is
    carried along so either reference can be used downstream.
    """
    respondents = draw_respondents(g, fraction, rng)
    survey = interview(g, respondents, nominations, rng)
    g_hat = estimate_gain(survey)
    mode = "in" if g.directed else "undirected"
    g_true = formula_gain(g.degrees(mode))
    emp = gain_summary(g, "mean").empirical_mean_gain
    return EstimatorResult(
        g_hat=g_hat,
        g_true=g_true,
        ratio=g_hat / g_true,
        r_used=respondents_used(survey),
        empirical_gain=emp,
        empirical_ratio=g_hat / emp,
    )


def protocol_trial(model, size, trial, master_seed,
                   fraction_range=(0.1, 0.2), nominations=1) -> TrialRow:
    """One self-seeded trial of the synthetic-network protocol.

    The child seed derives from (master_seed, size, trial), so trials are
    reproducible independently of execution order or parallelism.
    """
    rng = np.random.default_rng(
        np.random.SeedSequence([int(master_seed), int(size), int(trial)]))
    config = sample_config(model, size, rng)
    g = generate(config)
    fraction = float(rng.uniform(*fraction_range))
    res = run_trial(g, fraction, nominations, rng)
    return TrialRow(
        model=model, size=size, trial=trial, fraction=fraction,
        r_used=res.r_used, g_hat=res.g_hat, g_true=res.g_true,
        ratio=res.ratio, empirical_gain=res.empirical_gain,
        empirical_ratio=res.empirical_ratio,
    )


def run_trials(model, sizes, trials_per_size, master_seed,
               fraction_range=(0.1, 0.2), nominations=1) -> list:
    """Estimator-performance table over independently seeded trials.

    For each size, ``trials_per_size`` trials each draw a fresh config
    (via :func:`sample_config`), generate a graph, survey a random
    fraction of it drawn from ``fraction_range`` and record the estimate
    against both references.
    """
    if not sizes:
        raise ValueError("sizes must be non-empty")
    if trials_per_size < 1:
        raise ValueError("trials_per_size must be >= 1")
    rows = []
    for size in sizes:
        for t in range(trials_per_size):
            rows.append(protocol_trial(model, size, t, master_seed,
                                       fraction_range, nominations))
    return rows


def alter_vs_random(survey: Survey, g: Graph):
    """(mean degree of nominated alters, mean reported respondent degree).

    Alter degrees are in-degrees on directed graphs, matching how
    influence is measured; respondent degrees are the reported ones.
    Raises ValueError when the survey contains no nominations.
    """
    nominated = [n for n in survey.nominations if len(n)]
    if not nominated:
        raise ValueError("survey contains no nominations")
    alters = np.concatenate(nominated)
    influence = g.degrees("in" if g.directed else "undirected")
    return (float(influence[alters].mean()),
            float(survey.reported_degrees.mean()))


__all__ = [
    "Survey", "EstimatorResult", "TrialRow",
    "draw_respondents", "interview", "estimate_gain", "run_trial",
    "protocol_trial", "run_trials", "alter_vs_random",
    "GeneratorConfig",
]
