"""Parsing and validation of the experiment CSV files.

The producer writes a '#'-prefixed schema header naming the columns,
then plain CSV rows; empty cells mean "undefined here" (a gap in a
curve, an unbounded histogram edge).  This module never modifies the
inputs and fails loudly, naming the offending column, when a file does
not match the schema a figure needs.
"""
from __future__ import annotations

import csv
import io
import math


class SchemaError(ValueError):
    """An input CSV does not provide what the figure needs."""

    def __init__(self, message, column=None, path=None):
        self.column = column
        self.path = path
        super().__init__(message)


CURVE_COLUMNS = ("bin_low", "bin_high", "value", "count")
TRIALS_COLUMNS = ("trial", "size", "fraction", "r_used", "g_hat", "g_true",
                  "ratio")


def _cell(value):
    value = value.strip()
    if value == "":
        return None
    try:
        return float(value)
    except ValueError:
        return value


def read_table(path):
    """Parse one CSV into a list of per-row dicts keyed by schema column."""
    header = None
    rows = []
    with open(path, newline="") as fh:
        for line in fh:
            stripped = line.strip()
            if not stripped:
                continue
            if stripped.startswith("#"):
                if header is None:
                    header = [c.strip() for c in stripped[1:].split(",")]
                continue
            cells = next(csv.reader(io.StringIO(stripped)))
            rows.append(cells)
    if header is None:
        raise SchemaError(f"{path}: missing '#' schema header", path=path)
    out = []
    for cells in rows:
        if len(cells) < len(header):
            cells = cells + [""] * (len(header) - len(cells))
        out.append({col: _cell(cells[i]) for i, col in enumerate(header)})
    return header, out


def require_columns(path, header, needed):
    for column in needed:
        if column not in header:
            raise SchemaError(
                f"{path}: missing required column '{column}'",
                column=column, path=path)


def load_curve(path):
    """Rows of a curve/histogram file: (low, high, value, count) tuples."""
    header, rows = read_table(path)
    require_columns(path, header, CURVE_COLUMNS)
    if not rows:
        raise SchemaError(f"{path}: no data rows", path=path)
    return [(r["bin_low"], r["bin_high"], r["value"], r["count"])
            for r in rows]


def load_trials(path):
    """Rows of an estimator-performance file as dicts."""
    header, rows = read_table(path)
    require_columns(path, header, TRIALS_COLUMNS)
    if not rows:
        raise SchemaError(f"{path}: no data rows", path=path)
    for r in rows:
        if not isinstance(r["ratio"], float) or math.isnan(r["ratio"]):
            raise SchemaError(f"{path}: non-numeric ratio cell",
                              column="ratio", path=path)
    return rows
