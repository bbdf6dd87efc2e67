"""Alter sampling on graphs: pick a random neighbor of a random node.

The library quantifies how much better that neighbor is, on average, than
the node itself (the per-node and network-level sampling gain), estimates
the network-level gain from interview data alone, and ships the synthetic
network models and experiment presets used to validate the estimator.
"""

from .graph import (DegreeSequence, EdgeListError, Graph, degree_sequence,
                    edge_list_text, load_edge_list, neighbors,
                    write_edge_list)
from .stats import (DegreeMoments, NetworkStats, assortativity,
                    avg_clustering, formula_gain, moments, percentile_ranks,
                    summary)
from .gain import (Curve, GainHistogram, GainRecord, GainSummary,
                   exceedance_by_percentile, gain_histogram, gain_summary,
                   mean_gain_by_percentile, node_gain)
from .generators import (MODELS, GeneratorConfig, gen_holme_kim,
                         gen_klemm_eguiluz, gen_pref_attachment,
                         gen_small_world, generate, sample_config)
from .survey import (EstimatorResult, Survey, TrialRow, alter_vs_random,
                     draw_respondents, estimate_gain, interview, run_trial,
                     run_trials)

__version__ = "0.1.0"

__all__ = [
    "Graph", "DegreeSequence", "EdgeListError",
    "load_edge_list", "write_edge_list", "edge_list_text",
    "degree_sequence", "neighbors",
    "DegreeMoments", "NetworkStats", "moments", "assortativity",
    "avg_clustering", "percentile_ranks", "summary", "formula_gain",
    "GainRecord", "GainSummary", "Curve", "GainHistogram",
    "node_gain", "gain_summary", "exceedance_by_percentile",
    "mean_gain_by_percentile", "gain_histogram",
    "MODELS", "GeneratorConfig", "gen_small_world", "gen_pref_attachment",
    "gen_holme_kim", "gen_klemm_eguiluz", "sample_config", "generate",
    "Survey", "EstimatorResult", "TrialRow",
    "draw_respondents", "interview", "estimate_gain", "run_trial",
    "run_trials", "alter_vs_random",
]
