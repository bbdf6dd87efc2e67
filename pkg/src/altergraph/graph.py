"""Immutable simple-graph container backed by sorted CSR adjacency arrays.

Graphs are either undirected or directed, never both.  Node ids are dense
integers in [0, N); arbitrary string labels from an edge-list file are
remapped on ingestion and the label map is kept for reporting.  Self-loops
are dropped and parallel edges collapsed, so every Graph is simple.
"""
from __future__ import annotations

import io
import re
from dataclasses import dataclass

import numpy as np
from scipy import sparse

_CANON_HEADER = re.compile(
    r"#\s*altergraph\s+N=(\d+)\s+E=(\d+)\s+directed=(true|false)\s*$"
)

_INT_LABEL = re.compile(r"^[+-]?\d+$")


class EdgeListError(ValueError):
    """Malformed or empty edge-list input."""


@dataclass(frozen=True)
class DegreeSequence:
    """Per-node degree values for one mode ('undirected', 'in' or 'out')."""

    mode: str
    values: np.ndarray

    def __len__(self):
        return len(self.values)


def _csr_from_pairs(src, dst, n):
    """Build (indptr, indices) with neighbor lists sorted ascending."""
    order = np.argsort(src * np.int64(max(n, 1)) + dst)
    indices = dst[order]
    counts = np.bincount(src, minlength=n)
    indptr = np.concatenate(([0], np.cumsum(counts)))
    indptr.flags.writeable = False
    indices.flags.writeable = False
    return indptr, indices


class Graph:
    """Simple graph over dense integer node ids.

    Construct via :func:`load_edge_list` or :meth:`Graph.from_edges`; the
    adjacency is frozen after construction and safe to share across threads.

    Attributes
    ----------
    directed : bool
    node_count : int
        Number of nodes N.
    edge_count : int
        Number of edges E (each undirected edge counted once).
    labels : ndarray or None
        Original node labels indexed by id, when they differ from the ids.
    """

    def __init__(self, directed, n, edges, labels=None):
        # edges: (E, 2) int64 array, already normalized (no loops/dups,
        # undirected rows stored as u < v).
        self.directed = bool(directed)
        self.node_count = int(n)
        self.edge_count = int(len(edges))
        self.labels = labels
        self._edges = edges
        if self.directed:
            self._out_indptr, self._out_indices = _csr_from_pairs(
                edges[:, 0], edges[:, 1], n)
            self._in_indptr, self._in_indices = _csr_from_pairs(
                edges[:, 1], edges[:, 0], n)
        else:
            both_src = np.concatenate((edges[:, 0], edges[:, 1]))
            both_dst = np.concatenate((edges[:, 1], edges[:, 0]))
            self._indptr, self._indices = _csr_from_pairs(both_src, both_dst, n)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_edges(cls, edges, directed=False, n=None, labels=None):
        """Build a Graph from an (E, 2) array of node-id pairs.

        Self-loops are dropped and duplicate edges collapsed (for
        undirected graphs a reversed pair counts as a duplicate).  ``n``
        defaults to max id + 1.
        """
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if n is None:
            n = int(edges.max()) + 1 if len(edges) else 0
        if len(edges) and (edges.min() < 0 or edges.max() >= n):
            raise ValueError("edge endpoint outside [0, n)")
        edges = edges[edges[:, 0] != edges[:, 1]]
        if not directed:
            lo = edges.min(axis=1)
            hi = edges.max(axis=1)
            edges = np.column_stack((lo, hi))
        if len(edges):
            # dedupe via scalar codes; one 1-D sort beats a row-wise unique
            codes = np.unique(edges[:, 0] * np.int64(n) + edges[:, 1])
            edges = np.column_stack((codes // n, codes % n))
        return cls(directed, n, edges, labels=labels)

    # -- access ------------------------------------------------------------

    def neighbors(self, node, direction=None):
        """Sorted neighbor ids of ``node``.

        ``direction`` is 'undirected' for undirected graphs, 'out' or 'in'
        for directed ones; it defaults to the graph's natural mode
        ('undirected', or 'out' for directed graphs).
        """
        if not 0 <= node < self.node_count:
            raise ValueError(f"node {node} out of range [0, {self.node_count})")
        if direction is None:
            direction = "out" if self.directed else "undirected"
        if direction == "undirected":
            if self.directed:
                raise ValueError("direction 'undirected' on a directed graph")
            indptr, indices = self._indptr, self._indices
        elif direction == "out":
            if not self.directed:
                raise ValueError("direction 'out' on an undirected graph")
            indptr, indices = self._out_indptr, self._out_indices
        elif direction == "in":
            if not self.directed:
                raise ValueError("direction 'in' on an undirected graph")
            indptr, indices = self._in_indptr, self._in_indices
        else:
            raise ValueError(f"unknown direction {direction!r}")
        return indices[indptr[node]:indptr[node + 1]]

    def degrees(self, mode=None):
        """Degree array for ``mode`` ('undirected', 'in' or 'out')."""
        if mode is None:
            mode = "in" if self.directed else "undirected"
        if mode == "undirected":
            if self.directed:
                raise ValueError("mode 'undirected' on a directed graph")
            indptr = self._indptr
        elif mode == "out":
            if not self.directed:
                raise ValueError("mode 'out' on an undirected graph")
            indptr = self._out_indptr
        elif mode == "in":
            if not self.directed:
                raise ValueError("mode 'in' on an undirected graph")
            indptr = self._in_indptr
        else:
            raise ValueError(f"unknown mode {mode!r}")
        return np.diff(indptr)

    def edges(self):
        """Canonical (E, 2) edge array, rows sorted; undirected rows have u < v."""
        if len(self._edges) == 0:
            return self._edges.reshape(0, 2)
        order = np.lexsort((self._edges[:, 1], self._edges[:, 0]))
        return self._edges[order]

    def adjacency_csr(self, direction=None):
        """Adjacency as a scipy CSR matrix (0/1 entries).

        For undirected graphs the matrix is symmetric; for directed ones
        rows are sources ('out', default) or targets ('in').
        """
        n = self.node_count
        if self.directed:
            if direction in (None, "out"):
                indptr, indices = self._out_indptr, self._out_indices
            elif direction == "in":
                indptr, indices = self._in_indptr, self._in_indices
            else:
                raise ValueError(f"unknown direction {direction!r}")
        else:
            indptr, indices = self._indptr, self._indices
        data = np.ones(len(indices), dtype=np.float64)
        return sparse.csr_matrix((data, indices.copy(), indptr.copy()), shape=(n, n))

    def adjacency_arrays(self, direction=None):
        """Raw CSR (indptr, indices) pair for the requested direction."""
        if self.directed:
            if direction in (None, "out"):
                return self._out_indptr, self._out_indices
            if direction == "in":
                return self._in_indptr, self._in_indices
            raise ValueError(f"unknown direction {direction!r}")
        if direction in (None, "undirected"):
            return self._indptr, self._indices
        raise ValueError(f"unknown direction {direction!r}")

    def label_of(self, node):
        """Original label for a node id (the id itself when labels are trivial)."""
        if self.labels is None:
            return str(node)
        return str(self.labels[node])

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return f"Graph({kind}, N={self.node_count}, E={self.edge_count})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.directed == other.directed
                and self.node_count == other.node_count
                and self.edge_count == other.edge_count
                and np.array_equal(self.edges(), other.edges()))


def load_edge_list(source, directed=False):
    """Parse a whitespace-separated edge list into a Graph.

    ``source`` may be a path, a text or byte stream, or a string of file
    content.  One edge per line, exactly two tokens; lines starting with
    '#' are comments.  Labels may be arbitrary strings and are remapped to
    dense ids; ids are assigned in numeric order when every label is an
    integer, else in lexicographic order, so reloading a canonically
    emitted file reproduces the identical Graph.

    Raises
    ------
    EdgeListError
        On a line with the wrong token count (reported with its line
        number) or when the input contains no edges at all.
    """
    close = False
    if isinstance(source, bytes):
        fh = io.StringIO(source.decode("utf-8"))
    elif isinstance(source, str) and "\n" in source:
        fh = io.StringIO(source)
    elif hasattr(source, "read"):
        fh = source
    else:
        fh = open(source, "rb")
        close = True

    canon_n = None
    raw_edges = []
    labels_seen = {}
    try:
        for lineno, line in enumerate(fh, start=1):
            if isinstance(line, bytes):
                line = line.decode("utf-8")
            stripped = line.strip()
            if not stripped:
                continue
            if stripped.startswith("#"):
                m = _CANON_HEADER.match(stripped)
                if m:
                    canon_n = int(m.group(1))
                    canon_dir = m.group(3) == "true"
                    if canon_dir != directed:
                        raise EdgeListError(
                            f"line {lineno}: file is marked "
                            f"directed={m.group(3)} but loaded with "
                            f"directed={str(directed).lower()}")
                continue
            tokens = stripped.split()
            if len(tokens) != 2:
                raise EdgeListError(
                    f"line {lineno}: expected 2 tokens, got {len(tokens)}")
            for t in tokens:
                if t not in labels_seen:
                    labels_seen[t] = len(labels_seen)
            raw_edges.append((tokens[0], tokens[1]))
    finally:
        if close:
            fh.close()

    if not labels_seen:
        raise EdgeListError("empty input: no edges found")

    if canon_n is not None:
        # Canonical files carry dense integer ids already; keep them as-is
        # so that emit -> load is an exact round trip (isolated nodes
        # survive through the recorded N).
        n = canon_n
        ids = {}
        for lab in labels_seen:
            if not _INT_LABEL.match(lab):
                raise EdgeListError(f"canonical file has non-integer id {lab!r}")
            i = int(lab)
            if not 0 <= i < n:
                raise EdgeListError(f"node id {i} outside [0, {n}) from header")
            ids[lab] = i
        labels = None
    else:
        all_int = all(_INT_LABEL.match(lab) for lab in labels_seen)
        if all_int:
            ordered = sorted(labels_seen, key=int)
        else:
            ordered = sorted(labels_seen)
        ids = {lab: i for i, lab in enumerate(ordered)}
        n = len(ordered)
        if all_int and all(ids[lab] == int(lab) for lab in ordered):
            labels = None  # labels are exactly the dense ids
        else:
            labels = np.array(ordered, dtype=object)

    edges = np.array([(ids[u], ids[v]) for u, v in raw_edges],
                     dtype=np.int64).reshape(-1, 2)
    return Graph.from_edges(edges, directed=directed, n=n, labels=labels)


def write_edge_list(g, out):
    """Emit the canonical edge-list text for ``g``.

    One "u v" pair per line with ids ascending, preceded by a '#' header
    recording N, E and directedness.  ``out`` is a path or text stream.
    """
    close = False
    if hasattr(out, "write"):
        fh = out
    else:
        fh = open(out, "w")
        close = True
    try:
        kind = "true" if g.directed else "false"
        fh.write(f"# altergraph N={g.node_count} E={g.edge_count} directed={kind}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")
    finally:
        if close:
            fh.close()


def edge_list_text(g):
    """Canonical edge-list emission as a string."""
    buf = io.StringIO()
    write_edge_list(g, buf)
    return buf.getvalue()


def degree_sequence(g, mode=None):
    """Degree sequence of ``g`` for the requested mode.

    ``mode`` must be 'undirected' for undirected graphs and 'in' or 'out'
    for directed ones (default: the graph's natural mode; 'in' for
    directed graphs, since influence measures run on in-degrees).
    """
    if mode is None:
        mode = "in" if g.directed else "undirected"
    return DegreeSequence(mode=mode, values=g.degrees(mode))


def neighbors(g, node, direction=None):
    """Sorted neighbor list of ``node``; see :meth:`Graph.neighbors`."""
    return g.neighbors(node, direction)
