"""Render publication-style figures from altergraph experiment CSVs."""

from .render import FIGURES, FigureJob, RenderResult, render
from .schema import SchemaError, load_curve, load_trials, read_table

__version__ = "0.1.0"

__all__ = ["FIGURES", "FigureJob", "RenderResult", "render",
           "SchemaError", "load_curve", "load_trials", "read_table"]
