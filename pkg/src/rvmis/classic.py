"""Baseline algorithms: greedy, weighted greedy, random permutation, LP + greedy."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .graph import Graph
from .greedy import greedy, weighted_greedy
from .halfint import nt_solve

__all__ = ["greedy", "weighted_greedy", "random_permutation_is", "first_layer", "lp_plus_greedy", "wei_bound"]


def first_layer(g: Graph, perm) -> frozenset:
    """Vertices that precede all of their neighbours in ``perm``."""
    pos = np.empty(g.n, dtype=np.int64)
    pos[np.asarray(perm, dtype=np.int64)] = np.arange(g.n)
    return frozenset(v for v in range(g.n) if all(pos[u] > pos[v] for u in g.adj[v]))


def random_permutation_is(g: Graph, weights=None, rng_seed: int = 0) -> frozenset:
    """First layer of a seeded uniform permutation.

    Expected weight is at least ``sum_v w_v/(d(v)+1)``; ``weights`` does not
    affect which set is returned and is accepted for interface symmetry.
    """
    perm = np.random.default_rng(rng_seed).permutation(g.n)
    return first_layer(g, perm)


def lp_plus_greedy(g: Graph) -> frozenset:
    """Keep the LP's ONE vertices and run greedy on the graph induced by HALF."""
    sol = nt_solve(g)
    sub = g.induced(sol.half)
    return frozenset(sol.one) | sub.lift(greedy(sub.graph))


def wei_bound(g: Graph, weights=None):
    """``sum_v w_v / (d(v) + 1)``, the guarantee shared by greedy and random permutation."""
    w = weights if weights is not None else (Fraction(1),) * g.n
    return sum((Fraction(w[v]) / (g.degree(v) + 1) for v in range(g.n)), Fraction(0))
