"""Synthetic social-network generators and the randomized trial configs.

Four undirected models:

* ``sw``  -- ring lattice where every node links to its b nearest neighbors
  on each side, plus each absent pair added independently with probability
  p (shortcuts without rewiring);
* ``pa``  -- growth with degree-proportional attachment, seeded with a
  complete graph on m+1 nodes so the first attachment step is well posed;
* ``hk``  -- preferential attachment with a triad-formation step that links
  to a random neighbor of the previous attachment target;
* ``ke``  -- growing model with a sliding window of m active nodes, a
  degree-proportional escape probability mu, and deactivation of one
  previously-active node with probability inversely proportional to degree.

All functions are deterministic given their integer seed (PCG64 stream).
``sample_config`` draws parameters uniformly from the standard ranges for
each model and enforces the mean-degree acceptance bounds by rejection;
target mean degrees stay near the ~150-tie cognitive budget of real social
circles, capped at 200.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

MODELS = ("sw", "pa", "hk", "ke")

_MAX_CONFIG_TRIES = 1000


@dataclass(frozen=True)
class GeneratorConfig:
    model: str
    n: int
    b: int | None = None     # sw: ring half-degree
    p: float | None = None   # sw: shortcut probability per absent pair
    m: int | None = None     # pa/hk/ke: links per new node
    p_t: float | None = None  # hk: triad-formation probability
    mu: float | None = None  # ke: degree-proportional mixing probability
    seed: int = 0


# -- small-world ------------------------------------------------------------

def _ring_edges(n, b):
    src = np.repeat(np.arange(n, dtype=np.int64), b)
    offs = np.tile(np.arange(1, b + 1, dtype=np.int64), n)
    dst = (src + offs) % n
    return np.column_stack((src, dst))


def _order_preserving_unique(values):
    _, first = np.unique(values, return_index=True)
    return values[np.sort(first)]


def _sample_nonring_pairs(rng, n, b, k, total):
    """k distinct non-ring pairs, uniform over the ``total`` candidates.

    Draws iid pairs and deduplicates in draw order, which realizes uniform
    sampling without replacement; when k is a large fraction of the
    candidates the complement is sampled instead.
    """
    if k <= 0:
        return np.empty((0, 2), dtype=np.int64)
    if 2 * k >= total:
        return _nonring_complement(rng, n, b, total - k)
    chosen = np.empty(0, dtype=np.int64)
    batch = max(1024, k + k // 4 + 64)
    while len(chosen) < k:
        u = rng.integers(0, n, size=batch)
        v = rng.integers(0, n, size=batch)
        dist = (u - v) % n
        ok = (dist > b) & (dist < n - b)  # drops self-pairs and ring pairs
        code = np.minimum(u[ok], v[ok]) * n + np.maximum(u[ok], v[ok])
        chosen = _order_preserving_unique(np.concatenate((chosen, code)))[:k]
        batch = min(2 * batch, 1 << 22)
    return np.column_stack((chosen // n, chosen % n))


def _nonring_complement(rng, n, b, n_excluded):
    """All non-ring pairs except a uniform subset of ``n_excluded``."""
    excluded = np.empty(0, dtype=np.int64)
    if n_excluded > 0:
        batch = max(1024, n_excluded + n_excluded // 4 + 64)
        while len(excluded) < n_excluded:
            u = rng.integers(0, n, size=batch)
            v = rng.integers(0, n, size=batch)
            dist = (u - v) % n
            ok = (dist > b) & (dist < n - b)
            code = np.minimum(u[ok], v[ok]) * n + np.maximum(u[ok], v[ok])
            excluded = _order_preserving_unique(
                np.concatenate((excluded, code)))[:n_excluded]
            batch = min(2 * batch, 1 << 22)
        excluded = np.sort(excluded)

    rows = []
    for u in range(n):
        hi = n - 1 if u >= b else u + n - b - 1
        v = np.arange(u + b + 1, hi + 1, dtype=np.int64)
        if len(v) == 0:
            continue
        code = u * n + v
        if len(excluded):
            pos = np.searchsorted(excluded, code)
            pos = np.minimum(pos, len(excluded) - 1)
            code = code[excluded[pos] != code]
        rows.append(code)
    if not rows:
        return np.empty((0, 2), dtype=np.int64)
    code = np.concatenate(rows)
    return np.column_stack((code // n, code % n))


def gen_small_world(n, b, p, seed) -> Graph:
    """Ring lattice of half-degree b plus independent shortcut pairs.

    Every node keeps its 2b ring links, so min degree >= 2b; each of the
    n(n-1)/2 - n*b absent pairs is added independently with probability p.
    """
    if b < 1:
        raise ValueError("b must be >= 1")
    if n <= 2 * b:
        raise ValueError("need n > 2b")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    rng = np.random.default_rng(seed)
    ring = _ring_edges(n, b)
    total = n * (n - 1) // 2 - n * b
    k = int(rng.binomial(total, p)) if total > 0 and p > 0 else 0
    shortcuts = _sample_nonring_pairs(rng, n, b, k, total)
    edges = np.vstack((ring, shortcuts))
    return Graph.from_edges(edges, directed=False, n=n)


# -- preferential attachment -------------------------------------------------

def _distinct_pool_draws(rng, pool, fill, need):
    """``need`` distinct node ids drawn degree-proportionally from the pool.

    Equivalent to repeated single draws with rejection of duplicates; the
    pool holds each node id once per unit of degree.
    """
    taken = np.empty(0, dtype=np.int64)
    batch = max(32, 2 * need)
    while len(taken) < need:
        cand = pool[rng.integers(0, fill, size=batch)]
        taken = _order_preserving_unique(np.concatenate((taken, cand)))[:need]
        batch = min(2 * batch, 1 << 16)
    return taken


def _clique_edges(m):
    iu = np.triu_indices(m, k=1)
    return np.column_stack((iu[0].astype(np.int64), iu[1].astype(np.int64)))


def gen_pref_attachment(n, m, seed) -> Graph:
    """Growth by degree-proportional attachment of m links per new node.

    Seeded with a complete graph on m+1 nodes; every later node picks m
    distinct existing nodes with probability proportional to their current
    degree.  E = m(m+1)/2 + m(n-m-1) and the minimum degree is m.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if n <= m + 1:
        raise ValueError("need n > m + 1")
    rng = np.random.default_rng(seed)
    n_edges = m * (m + 1) // 2 + m * (n - m - 1)
    pool = np.empty(2 * n_edges, dtype=np.int64)
    pool[:(m + 1) * m] = np.repeat(np.arange(m + 1, dtype=np.int64), m)
    fill = (m + 1) * m

    edges = np.empty((n_edges, 2), dtype=np.int64)
    edges[:m * (m + 1) // 2] = _clique_edges(m + 1)
    e_fill = m * (m + 1) // 2

    for src in range(m + 1, n):
        targets = _distinct_pool_draws(rng, pool, fill, m)
        edges[e_fill:e_fill + m, 0] = src
        edges[e_fill:e_fill + m, 1] = targets
        e_fill += m
        pool[fill:fill + m] = targets
        pool[fill + m:fill + 2 * m] = src
        fill += 2 * m
    return Graph.from_edges(edges, directed=False, n=n)


# -- Holme-Kim ---------------------------------------------------------------

class _IndexFeed:
    """Pre-drawn uniform integers over a fixed range, consumed one at a time."""

    def __init__(self, rng, high, block):
        self.rng = rng
        self.high = high
        self.block = block
        self.buf = rng.integers(0, high, size=block)
        self.ptr = 0

    def take(self):
        if self.ptr >= len(self.buf):
            self.buf = self.rng.integers(0, self.high, size=self.block)
            self.ptr = 0
        value = self.buf[self.ptr]
        self.ptr += 1
        return value


def gen_holme_kim(n, m, p_t, seed) -> Graph:
    """Preferential attachment with a triad-formation step.

    Per new node the first link is an attachment step; each further link
    is, with probability p_t, made to a uniformly random neighbor of the
    previous attachment target (not yet linked), falling back to plain
    attachment when no such neighbor exists.  The edge count matches the
    plain model exactly.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if n <= m + 1:
        raise ValueError("need n > m + 1")
    if not 0.0 <= p_t <= 1.0:
        raise ValueError("p_t must be in [0, 1]")
    rng = np.random.default_rng(seed)
    n_edges = m * (m + 1) // 2 + m * (n - m - 1)
    pool = np.empty(2 * n_edges, dtype=np.int64)
    pool[:(m + 1) * m] = np.repeat(np.arange(m + 1, dtype=np.int64), m)
    fill = (m + 1) * m

    adj = [[] for _ in range(n)]
    for i in range(m + 1):
        adj[i] = [j for j in range(m + 1) if j != i]
    src_list = []
    dst_list = []

    for src in range(m + 1, n):
        # valid-node degrees cannot change mid-round (any node gaining an
        # edge becomes a duplicate target), so one pool snapshot serves
        # every attachment draw of this round
        feed = _IndexFeed(rng, fill, 4 * m + 16)
        routes = rng.random(m - 1) if m > 1 else ()
        taken = set()

        def attach_step():
            while True:
                w = int(pool[feed.take()])
                if w not in taken:
                    return w

        target = attach_step()
        taken.add(target)
        adj[src].append(target)
        adj[target].append(src)
        src_list.append(src)
        dst_list.append(target)
        last_pa = target

        for r in routes:
            w = None
            if r < p_t:
                nbrs = adj[last_pa]
                cap = 2 * len(nbrs) + 8
                for _ in range(cap):
                    cand = nbrs[int(rng.random() * len(nbrs))]
                    if cand != src and cand not in taken:
                        w = cand
                        break
                else:
                    valid = [c for c in nbrs if c != src and c not in taken]
                    if valid:
                        w = valid[int(rng.random() * len(valid))]
                if w is None:
                    w = attach_step()
                    last_pa = w
            else:
                w = attach_step()
                last_pa = w
            taken.add(w)
            adj[src].append(w)
            adj[w].append(src)
            src_list.append(src)
            dst_list.append(w)

        k = len(taken)
        pool[fill:fill + k] = np.fromiter(taken, dtype=np.int64, count=k)
        pool[fill + k:fill + 2 * k] = src
        fill += 2 * k

    edges = np.vstack((
        _clique_edges(m + 1),
        np.column_stack((np.array(src_list, dtype=np.int64),
                         np.array(dst_list, dtype=np.int64))),
    ))
    return Graph.from_edges(edges, directed=False, n=n)


# -- Klemm-Eguiluz ------------------------------------------------------------

def gen_klemm_eguiluz(n, m, mu, seed) -> Graph:
    """Growing model with m active nodes and degree-proportional escapes.

    Seeded with m fully connected active nodes.  Each new node creates m
    links: each link goes with probability mu to a degree-proportional
    random node and otherwise to one of the active nodes (distinct targets
    enforced).  The new node is activated and one previously-active node is
    deactivated with probability proportional to 1/degree.  E is exactly
    m(m-1)/2 + m(n-m).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if n <= m:
        raise ValueError("need n > m")
    if not 0.0 <= mu <= 1.0:
        raise ValueError("mu must be in [0, 1]")
    rng = np.random.default_rng(seed)
    n_edges = m * (m - 1) // 2 + m * (n - m)
    pool = np.empty(2 * n_edges, dtype=np.int64)
    pool[:m * (m - 1)] = np.repeat(np.arange(m, dtype=np.int64), m - 1)
    fill = m * (m - 1)

    deg = np.zeros(n, dtype=np.int64)
    deg[:m] = m - 1
    active = list(range(m))
    src_list = []
    dst_list = []

    for src in range(m, n):
        feed = _IndexFeed(rng, fill, 2 * m + 16) if fill > 0 else None
        routes = rng.random(m)
        taken = set()

        def attach_draw():
            # degree-proportional among nodes not yet taken; uniform
            # fallback covers the degenerate all-degrees-zero start
            if feed is None:
                free = [c for c in range(src) if c not in taken]
                return free[int(rng.random() * len(free))]
            cap = 64
            for _ in range(cap):
                w = int(pool[feed.take()])
                if w not in taken:
                    return w
            free = np.array([c for c in range(src) if c not in taken],
                            dtype=np.int64)
            weights = deg[free].astype(np.float64)
            if weights.sum() <= 0:
                return int(free[int(rng.random() * len(free))])
            cum = np.cumsum(weights)
            return int(free[np.searchsorted(cum, rng.random() * cum[-1],
                                            side="right")])

        for r in routes:
            if r < mu:
                w = attach_draw()
            else:
                w = None
                for _ in range(4 * m + 16):
                    cand = active[int(rng.random() * m)]
                    if cand not in taken:
                        w = cand
                        break
                else:
                    valid = [c for c in active if c not in taken]
                    if valid:
                        w = valid[int(rng.random() * len(valid))]
                if w is None:  # every active node already linked
                    w = attach_draw()
            taken.add(w)
            src_list.append(src)
            dst_list.append(w)
            deg[w] += 1

        deg[src] = m
        k = len(taken)
        pool[fill:fill + k] = np.fromiter(taken, dtype=np.int64, count=k)
        pool[fill + k:fill + 2 * k] = src
        fill += 2 * k

        # replace one previously-active node, chosen with probability
        # inversely proportional to its current degree
        weights = 1.0 / deg[np.array(active)]
        cum = np.cumsum(weights)
        out_idx = int(np.searchsorted(cum, rng.random() * cum[-1],
                                      side="right"))
        active[min(out_idx, m - 1)] = src

    edges = np.vstack((
        _clique_edges(m),
        np.column_stack((np.array(src_list, dtype=np.int64),
                         np.array(dst_list, dtype=np.int64))),
    ))
    return Graph.from_edges(edges, directed=False, n=n)


# -- configuration sampling ----------------------------------------------------

def pa_edge_count(n, m):
    return m * (m + 1) // 2 + m * (n - m - 1)


def ke_edge_count(n, m):
    return m * (m - 1) // 2 + m * (n - m)


def sample_config(model, n, rng) -> GeneratorConfig:
    """Draw a random parameter set for ``model`` at size ``n``.

    Parameters come uniformly from the standard ranges (sw: b in 5..10
    with mean degree capped at 200; pa: m in 50..75; hk: m in 50..100 and
    p_t in [0, 0.5] with mean degree under 150; ke: m in 50..100 with mean
    degree in [100, 200]); bounds outside the uniform ranges are enforced
    by rejection, erroring out after 1000 attempts.
    """
    if model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}")
    seed = int(rng.integers(0, np.iinfo(np.int64).max))
    if model == "sw":
        b_hi = min(10, (n - 1) // 2)
        if b_hi < 5:
            raise ValueError("n too small for the small-world protocol")
        b = int(rng.integers(5, b_hi + 1))
        p_max = min(1.0, (200.0 - 2 * b) / (n - 1 - 2 * b))
        p = float(rng.uniform(0.0, p_max))
        return GeneratorConfig(model="sw", n=n, b=b, p=p, seed=seed)
    if model == "pa":
        m = int(rng.integers(50, 76))
        if n <= m + 1:
            raise ValueError("n too small for the attachment protocol")
        return GeneratorConfig(model="pa", n=n, m=m, seed=seed)
    if model == "hk":
        for _ in range(_MAX_CONFIG_TRIES):
            m = int(rng.integers(50, 101))
            p_t = float(rng.uniform(0.0, 0.5))
            if n > m + 1 and 2.0 * pa_edge_count(n, m) / n < 150.0:
                return GeneratorConfig(model="hk", n=n, m=m, p_t=p_t, seed=seed)
        raise RuntimeError("no acceptable hk config found in 1000 attempts")
    for _ in range(_MAX_CONFIG_TRIES):
        m = int(rng.integers(50, 101))
        mu = float(rng.uniform(0.0, 1.0))
        if n > m and 100.0 <= 2.0 * ke_edge_count(n, m) / n <= 200.0:
            return GeneratorConfig(model="ke", n=n, m=m, mu=mu, seed=seed)
    raise RuntimeError("no acceptable ke config found in 1000 attempts")


def generate(config: GeneratorConfig) -> Graph:
    """Generate the graph described by a GeneratorConfig."""
    if config.model == "sw":
        return gen_small_world(config.n, config.b, config.p, config.seed)
    if config.model == "pa":
        return gen_pref_attachment(config.n, config.m, config.seed)
    if config.model == "hk":
        return gen_holme_kim(config.n, config.m, config.p_t, config.seed)
    if config.model == "ke":
        return gen_klemm_eguiluz(config.n, config.m, config.mu, config.seed)
    raise ValueError(f"model must be one of {MODELS}")
