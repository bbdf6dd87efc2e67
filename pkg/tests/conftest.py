import numpy as np
import pytest

from altergraph import Graph


@pytest.fixture
def path3():
    # 0 - 1 - 2
    return Graph.from_edges([(0, 1), (1, 2)], directed=False)


@pytest.fixture
def star4():
    # hub 0 with leaves 1, 2, 3
    return Graph.from_edges([(0, 1), (0, 2), (0, 3)], directed=False)


@pytest.fixture
def cycle4():
    return Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 0)], directed=False)


@pytest.fixture
def dicycle3():
    # a -> b -> c -> a
    return Graph.from_edges([(0, 1), (1, 2), (2, 0)], directed=True)


@pytest.fixture
def triangle():
    return Graph.from_edges([(0, 1), (1, 2), (0, 2)], directed=False)


def random_graph(rng, n, density, directed=False):
    """Erdos-Renyi style test graph; may contain isolated nodes."""
    full = np.array([(i, j) for i in range(n) for j in range(n)
                     if (i != j and (directed or i < j))], dtype=np.int64)
    keep = rng.random(len(full)) < density
    return Graph.from_edges(full[keep], directed=directed, n=n)


def random_connected_degrees_graph(rng, n, density):
    """Undirected random graph with every degree >= 1 (cycle backbone)."""
    backbone = [(i, (i + 1) % n) for i in range(n)]
    extra = np.array([(i, j) for i in range(n) for j in range(i + 1, n)],
                     dtype=np.int64)
    keep = rng.random(len(extra)) < density
    edges = np.vstack((np.array(backbone, dtype=np.int64), extra[keep]))
    return Graph.from_edges(edges, directed=False, n=n)
