"""Shared test corpus: every graph on at most 7 vertices plus seeded random graphs."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import networkx as nx
import numpy as np
from hypothesis import strategies as st

from rvmis.graph import Graph, build_graph

RANDOM_SEED = 20240611


def from_nx(h) -> Graph:
    idx = {v: i for i, v in enumerate(h.nodes())}
    return build_graph(h.number_of_nodes(), [(idx[u], idx[v]) for u, v in h.edges()])


@lru_cache(maxsize=None)
def atlas(max_n: int = 7, connected_only: bool = False) -> tuple:
    """All graphs up to isomorphism on 1..max_n vertices (max_n <= 7)."""
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n == 0 or n > max_n:
            continue
        if connected_only and not nx.is_connected(h):
            continue
        out.append(from_nx(h))
    return tuple(out)


@lru_cache(maxsize=None)
def random_graphs(count: int = 500, max_n: int = 14, seed: int = RANDOM_SEED) -> tuple:
    """Seeded G(n, p) graphs with n uniform in 1..max_n and p uniform in [0.1, 0.7]."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(1, max_n + 1))
        p = float(rng.uniform(0.1, 0.7))
        iu, ju = np.triu_indices(n, 1)
        keep = rng.random(len(iu)) < p
        out.append(build_graph(n, zip(iu[keep].tolist(), ju[keep].tolist())))
    return tuple(out)


def corpus(max_n: int = 14) -> tuple:
    return tuple(g for g in atlas(7) + random_graphs() if g.n <= max_n)


def rational_weights(n: int, seed: int) -> tuple:
    rng = np.random.default_rng(seed)
    return tuple(Fraction(int(a), int(b)) for a, b in zip(rng.integers(1, 10, n), rng.integers(1, 5, n)))


@st.composite
def graphs(draw, max_n=10):
    """Hypothesis strategy for simple graphs on at most ``max_n`` vertices."""
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, edges)
