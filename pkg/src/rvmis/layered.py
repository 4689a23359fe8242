"""Random-permutation layers, prefix graphs G_k, and the algorithms built on them.

A permutation puts vertex ``v`` in layer ``i`` when exactly ``i - 1`` of its
neighbours precede it.  ``G_k`` is induced by layers ``1..k``; orienting every
edge towards its earlier endpoint shows ``G_k`` is ``(k-1)``-degenerate, so
``G_2`` is a forest.

Randomised entry points take an integer seed; the permutation for seed ``s``
is ``numpy.random.default_rng(s).permutation(n)``.  The ``*_trials``
functions evaluate many seeds at once through :mod:`rvmis.kernels` and
reproduce the single-run functions seed by seed.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from statistics import NormalDist
from typing import Callable, Iterable, Sequence

import numpy as np

from . import kernels
from .errors import InvariantBreach, PreconditionError
from .graph import Graph, Weights, as_weights, scale_to_int


@dataclass(frozen=True)
class LayerDecomposition:
    graph: Graph
    permutation: tuple
    layer: tuple  # 1 + number of neighbours earlier in the permutation

    def prefix_vertices(self, k: int) -> tuple:
        return tuple(v for v in range(self.graph.n) if self.layer[v] <= k)


def permutation_for_seed(n: int, seed: int) -> np.ndarray:
    return np.random.default_rng(seed).permutation(n).astype(np.int64)


def permutations_for_seeds(n: int, seeds: Iterable[int]) -> np.ndarray:
    rows = [permutation_for_seed(n, s) for s in seeds]
    if not rows:
        return np.zeros((0, n), dtype=np.int64)
    return np.stack(rows)


def decompose(g: Graph, perm: Sequence[int]) -> LayerDecomposition:
    perm = np.asarray(perm, dtype=np.int64)
    if sorted(perm.tolist()) != list(range(g.n)):
        raise ValueError("not a permutation of the vertex set")
    indptr, indices = g.csr
    layers = kernels.prefix_layers(indptr, indices, perm[None, :], max(g.n, 1))[0]
    return LayerDecomposition(g, tuple(int(x) for x in perm), tuple(int(x) for x in layers))


def layer_decompose(g: Graph, rng_seed: int) -> LayerDecomposition:
    return decompose(g, permutation_for_seed(g.n, rng_seed))


@dataclass(frozen=True)
class PrefixGraph:
    """``G_k`` with the original id of each vertex; certified on construction."""

    graph: Graph
    vertices: tuple
    k: int

    def lift(self, local: Iterable[int]) -> frozenset:
        return frozenset(self.vertices[i] for i in local)


def prefix_graph(d: LayerDecomposition, k: int) -> PrefixGraph:
    if k < 1:
        raise ValueError("k must be at least 1")
    sub = d.graph.induced(d.prefix_vertices(k))
    pos = {v: i for i, v in enumerate(d.permutation)}
    # certificate: orient towards the earlier endpoint, out-degree <= k-1
    for i, v in enumerate(sub.vertices):
        back = sum(1 for j in sub.graph.adj[i] if pos[sub.vertices[j]] < pos[v])
        if back > k - 1:
            raise InvariantBreach(f"vertex {v} has {back} earlier neighbours inside G_{k}")
    if k == 2 and not sub.graph.is_forest():
        raise InvariantBreach("G_2 contains a cycle")
    return PrefixGraph(sub.graph, sub.vertices, k)


# -- degeneracy -----------------------------------------------------------

def degeneracy_order(g: Graph) -> tuple:
    """``(order, degeneracy)`` by repeatedly peeling a minimum-degree vertex."""
    deg = list(g.degrees)
    alive = [True] * g.n
    heap = [(deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    order, k = [], 0
    while heap:
        d, v = heapq.heappop(heap)
        if not alive[v] or d != deg[v]:
            continue
        alive[v] = False
        order.append(v)
        k = max(k, d)
        for u in g.adj[v]:
            if alive[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return order, k


def degeneracy(g: Graph) -> int:
    return degeneracy_order(g)[1]


# -- forests --------------------------------------------------------------

def forest_mwis(g: Graph, weights: Weights | None = None) -> frozenset:
    """Exact maximum-weight independent set of a forest by two-state tree DP."""
    if not g.is_forest():
        raise PreconditionError("forest_mwis needs an acyclic graph")
    w = as_weights(g.n, weights)
    parent = [-1] * g.n
    seen = [False] * g.n
    order = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            v = stack.pop()
            order.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    parent[u] = v
                    stack.append(u)
    incl = list(w)
    excl = [Fraction(0)] * g.n
    for v in reversed(order):
        p = parent[v]
        if p >= 0:
            incl[p] += excl[v]
            excl[p] += max(incl[v], excl[v])
    taken = [False] * g.n
    for v in order:
        p = parent[v]
        taken[v] = not (p >= 0 and taken[p]) and incl[v] > excl[v]
    return frozenset(v for v in range(g.n) if taken[v])


# -- Monte-Carlo bookkeeping ---------------------------------------------

@dataclass(frozen=True)
class TrialStats:
    """Per-trial outcomes ``values / scale`` with exact mean and normal CIs."""

    values: np.ndarray
    scale: int
    seeds: tuple

    @property
    def trials(self) -> int:
        return len(self.values)

    @property
    def mean(self) -> Fraction:
        return Fraction(sum(int(x) for x in self.values), self.trials * self.scale)

    @property
    def std_error(self) -> float:
        if self.trials < 2:
            return float("inf")
        return float(np.std(self.values / self.scale, ddof=1)) / sqrt(self.trials)

    def ci(self, level: float = 0.99) -> tuple:
        z = NormalDist().inv_cdf(0.5 + level / 2)
        m, se = float(self.mean), self.std_error
        return (m - z * se, m + z * se)


# -- fast randomised MWIS (first two layers) ------------------------------

def _require_min_degree(g: Graph, k: int, what: str) -> None:
    for v in range(g.n):
        if g.degree(v) < k:
            raise PreconditionError(f"{what} needs minimum degree >= {k}; vertex {v} has degree {g.degree(v)}", vertex=v)


def fast_randomized_mwis(g: Graph, weights: Weights | None = None, rng_seed: int = 0) -> frozenset:
    """Optimal independent set of ``G_2`` for one seeded permutation.

    Expected weight is at least ``sum_{v in I} 2 w_v/(d(v)+1)`` for every
    independent set ``I``.  Isolated vertices must be handled by the caller.
    """
    _require_min_degree(g, 1, "fast_randomized_mwis")
    w = as_weights(g.n, weights)
    p = prefix_graph(layer_decompose(g, rng_seed), 2)
    return p.lift(forest_mwis(p.graph, tuple(w[v] for v in p.vertices)))


def fast_randomized_trials(g: Graph, weights: Weights | None = None, seeds: Iterable[int] = range(1000)) -> TrialStats:
    """Weights found by :func:`fast_randomized_mwis` for each seed (kernel path)."""
    _require_min_degree(g, 1, "fast_randomized_mwis")
    seeds = tuple(seeds)
    ints, L = scale_to_int(as_weights(g.n, weights))
    if sum(ints) >= 2 ** 62:
        raise OverflowError("scaled weights exceed the int64 kernel range")
    perms = permutations_for_seeds(g.n, seeds)
    indptr, indices = g.csr
    vals = kernels.g2_forest_weight(indptr, indices, perms, np.asarray(ints, dtype=np.int64))
    return TrialStats(vals, L, seeds)


# -- PLG ------------------------------------------------------------------

PLG_VARIANTS = ("G3_HR", "G4_after_2elim", "G3_avg2")


@dataclass(frozen=True)
class _Prepared:
    work: Graph
    lift: Callable
    k: int
    solver: Callable


def _plg_prepare(g: Graph, variant: str) -> _Prepared:
    from .avg2 import solve_avg2
    from .classic import lp_plus_greedy
    from .reductions import reduce_low_degree

    if variant == "G3_HR":
        _require_min_degree(g, 2, "PLG variant G3_HR")
        return _Prepared(g, frozenset, 3, lp_plus_greedy)
    if variant == "G4_after_2elim":
        red = reduce_low_degree(g, mode="mis", rho=Fraction(20, 9))
        return _Prepared(red.graph, red.trace.lift, 4, lp_plus_greedy)
    if variant == "G3_avg2":
        red = reduce_low_degree(g, mode="mwis")
        return _Prepared(red.graph, red.trace.lift, 3, lambda h: solve_avg2(h).members)
    raise ValueError(f"unknown PLG variant {variant!r}; expected one of {PLG_VARIANTS}")


def _solve_on(prep: _Prepared, vertices) -> frozenset:
    sub = prep.work.induced(vertices)
    return prep.lift(sub.lift(prep.solver(sub.graph)))


def plg_from_permutation(g: Graph, perm: Sequence[int], variant: str = "G3_HR") -> frozenset:
    """PLG with an explicit permutation of the (reduced) working graph."""
    prep = _plg_prepare(g, variant)
    p = prefix_graph(decompose(prep.work, perm), prep.k)
    return _solve_on(prep, p.vertices)


def plg(g: Graph, rng_seed: int = 0, variant: str = "G3_HR") -> frozenset:
    """Permute, LP, greedy.

    ``G3_HR``: LP + greedy on ``G_3`` (minimum degree >= 2 required).
    ``G4_after_2elim``: 0/1/2-eliminations, then LP + greedy on ``G_4``.
    ``G3_avg2``: 0/1-eliminations, then the average-degree-2 solver on ``G_3``.
    """
    prep = _plg_prepare(g, variant)
    perm = permutation_for_seed(prep.work.n, rng_seed)
    p = prefix_graph(decompose(prep.work, perm), prep.k)
    return _solve_on(prep, p.vertices)


def plg_trials(g: Graph, seeds: Iterable[int] = range(1000), variant: str = "G3_HR") -> TrialStats:
    """Sizes returned by :func:`plg` for each seed.

    After the permutation, PLG is a deterministic function of the vertex
    set of ``G_k``, so each distinct prefix set is solved once.
    """
    seeds = tuple(seeds)
    prep = _plg_prepare(g, variant)
    n = prep.work.n
    if n == 0:
        size = len(prep.lift(frozenset()))
        return TrialStats(np.full(len(seeds), size, dtype=np.int64), 1, seeds)
    perms = permutations_for_seeds(n, seeds)
    indptr, indices = prep.work.csr
    inside = kernels.prefix_layers(indptr, indices, perms, prep.k) <= prep.k
    uniq, inverse = np.unique(inside, axis=0, return_inverse=True)
    sizes = np.array([len(_solve_on(prep, np.flatnonzero(row))) for row in uniq], dtype=np.int64)
    return TrialStats(sizes[np.ravel(inverse)], 1, seeds)


# -- degeneracy pipeline ---------------------------------------------------

def degeneracy_greedy(g: Graph) -> frozenset:
    """Scan a degeneracy order and keep every vertex with no kept neighbour."""
    order, _ = degeneracy_order(g)
    kept = set()
    for v in order:
        if not any(u in kept for u in g.adj[v]):
            kept.add(v)
    return frozenset(kept)


def sdp_inner(g: Graph) -> frozenset:
    """Slot for an SDP-based solver on degenerate graphs; not provided."""
    raise NotImplementedError("no SDP inner solver is bundled; pass your own callable")


def degeneracy_pipeline(g: Graph, rng_seed: int = 0, inner: Callable | None = None) -> frozenset:
    """Run ``inner`` on ``G_{delta+1}``, which is delta-degenerate (delta = min degree)."""
    _require_min_degree(g, 1, "degeneracy_pipeline")
    inner = inner or degeneracy_greedy
    p = prefix_graph(layer_decompose(g, rng_seed), g.min_degree + 1)
    return p.lift(inner(p.graph))

