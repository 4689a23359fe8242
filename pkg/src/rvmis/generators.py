"""Named instance families and seeded random graphs."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import InvariantBreach
from .graph import Graph, Weights, build_graph, disjoint_union
from .kcolored import Coloring


# -- hardness product -----------------------------------------------------

def gen_hardness_product(g: Graph, k: int) -> tuple:
    """``k`` copies of every vertex, copy ``i`` of ``v`` has id ``i*n + v``.

    Classes ``0..k-2`` carry a copy of ``G`` between every pair of distinct
    classes; class ``k-1`` is matched to each of them (``v_{k-1}`` sees
    ``v_i`` for every ``i < k-1``).  ``alpha(G') = n + (k-2) alpha(G)``.
    """
    if k < 3:
        raise ValueError(f"hardness product needs k >= 3, got {k}")
    n = g.n
    edges = []
    for i, j in combinations(range(k - 1), 2):
        for u, v in g.edges():
            edges.append((i * n + u, j * n + v))
            edges.append((i * n + v, j * n + u))
    last = (k - 1) * n
    for i in range(k - 1):
        edges.extend((i * n + v, last + v) for v in range(n))
    color = tuple(i for i in range(k) for _ in range(n))
    gp = build_graph(k * n, edges)
    return gp, Coloring(k, color).check(gp)


def normalize_product_solution(g: Graph, k: int, s) -> frozenset:
    """Exchange argument: an independent set of the product becomes one of equal or larger size
    in which each original vertex has either all of copies ``0..k-2`` or copy ``k-1``.

    Let ``A`` be the vertices ``v`` with ``v_{k-1}`` outside the set.  Any class
    ``i < k-1`` restricted to ``A`` is independent in ``G``, so the largest
    such restriction ``B`` can be copied into every class while every other
    vertex takes its matched copy ``v_{k-1}``.
    """
    n = g.n
    s = frozenset(s)
    top = (k - 1) * n
    outside = [v for v in range(n) if top + v not in s]
    best = max(
        (frozenset(v for v in outside if i * n + v in s) for i in range(k - 1)),
        key=lambda b: (len(b), sorted(b)),
    )
    if not g.is_independent(best):
        raise InvariantBreach("a product class restricted to free vertices is not independent in G")
    out = {i * n + v for v in best for i in range(k - 1)}
    out |= {top + v for v in range(n) if v not in best}
    return frozenset(out)


# -- lower-bound families --------------------------------------------------

def gen_layered_counterexample(k: int, d: int) -> Graph:
    """Three layers: ``k`` roots, ``dk`` middle vertices, a clique of ``dk(d-1)``.

    Ids run layer by layer, so lowest-id greedy starts from the roots.
    """
    if k < 1 or d < 2:
        raise ValueError("need k >= 1 and d >= 2")
    mid0 = k
    low0 = k + d * k
    n = low0 + d * k * (d - 1)
    edges = []
    for r in range(k):
        edges.extend((r, mid0 + r * d + j) for j in range(d))
    for m in range(d * k):
        edges.extend((mid0 + m, low0 + m * (d - 1) + j) for j in range(d - 1))
    edges.extend(combinations(range(low0, n), 2))
    return build_graph(n, edges)


def layered_counterexample_middle(k: int, d: int) -> tuple:
    """Ids of the independent middle layer of :func:`gen_layered_counterexample`."""
    return tuple(range(k, k + d * k))


def gen_rvlp_tight(k: int) -> tuple:
    """Clique on ``0..k-1`` (weight ``2k/(k+1)``) joined completely to an independent set (weight 1)."""
    if k < 1:
        raise ValueError("k must be positive")
    edges = list(combinations(range(k), 2))
    edges += [(i, k + j) for i in range(k) for j in range(k)]
    weights = (Fraction(2 * k, k + 1),) * k + (Fraction(1),) * k
    return build_graph(2 * k, edges), weights


# -- structured families ----------------------------------------------------

def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ValueError("part sizes must be non-negative")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


NAMED = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "star": star,
    "complete_bipartite": complete_bipartite,
    "petersen": petersen,
}


# -- random families --------------------------------------------------------

def _gnp(rng, n: int, p: float) -> Graph:
    if n < 0 or not 0 <= p <= 1:
        raise ValueError("gnp needs n >= 0 and p in [0, 1]")
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(len(iu)) < p
    return build_graph(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def _regular(rng, n: int, d: int, max_tries: int = 10_000) -> Graph:
    if n < 0 or d < 0 or (n > 0 and d >= n) or (n * d) % 2:
        raise ValueError(f"no simple {d}-regular graph on {n} vertices")
    points = np.repeat(np.arange(n), d)
    for _ in range(max_tries):
        rng.shuffle(points)
        pairs = points.reshape(-1, 2)
        if (pairs[:, 0] == pairs[:, 1]).any():
            continue
        key = np.sort(pairs, axis=1)
        if len(np.unique(key, axis=0)) == len(key):
            return build_graph(n, key.tolist())
    raise RuntimeError(f"pairing model failed {max_tries} times for regular({n}, {d})")


def _cycles_and_paths(rng, cycles=(), paths=()) -> Graph:
    parts = [cycle(c) for c in cycles] + [path(p) for p in paths]
    g = disjoint_union(*parts) if parts else build_graph(0, [])
    return _shuffle(rng, g)


def _unicyclic_forest(rng, n: int, cycles: int = 1) -> Graph:
    """Random forest on ``n`` vertices plus ``cycles`` extra edges (average degree about 2)."""
    if n < 1:
        raise ValueError("n must be positive")
    edges = {(int(rng.integers(0, v)), v) for v in range(1, n) if rng.random() < 0.85}
    missing = [(u, v) for u, v in combinations(range(n), 2) if (u, v) not in edges]
    if missing and cycles:
        for i in rng.choice(len(missing), size=min(cycles, len(missing)), replace=False):
            edges.add(missing[int(i)])
    return build_graph(n, edges)


def _kcolored(rng, n: int, k: int, p: float) -> Graph:
    color = rng.integers(0, k, n)
    iu, ju = np.triu_indices(n, 1)
    keep = (color[iu] != color[ju]) & (rng.random(len(iu)) < p)
    return build_graph(n, zip(iu[keep].tolist(), ju[keep].tolist())), Coloring(k, tuple(int(c) for c in color))


def _shuffle(rng, g: Graph) -> Graph:
    perm = rng.permutation(g.n)
    return build_graph(g.n, [(int(perm[u]), int(perm[v])) for u, v in g.edges()])


RANDOM_KINDS = {
    "gnp": _gnp,
    "regular": _regular,
    "complete_bipartite": lambda rng, a, b: complete_bipartite(a, b),
    "cycles_and_paths": _cycles_and_paths,
    "unicyclic_forest": _unicyclic_forest,
}


def gen_random(kind: str, rng_seed: int = 0, **params) -> Graph:
    """Seeded instance of a random family; same seed and parameters give the same graph."""
    try:
        fn = RANDOM_KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown random family {kind!r}; expected one of {sorted(RANDOM_KINDS)}") from None
    return fn(np.random.default_rng(rng_seed), **params)


def gen_kcolored(n: int, k: int, p: float = 0.5, rng_seed: int = 0) -> tuple:
    """Random graph with a planted proper ``k``-colouring; returns ``(Graph, Coloring)``."""
    if k < 1:
        raise ValueError("k must be positive")
    g, c = _kcolored(np.random.default_rng(rng_seed), n, k, p)
    return g, c.check(g)


def random_weights(n: int, rng_seed: int = 0, max_num: int = 9, max_den: int = 4) -> Weights:
    """Positive rationals ``p/q`` with ``1 <= p <= max_num``, ``1 <= q <= max_den``."""
    rng = np.random.default_rng(rng_seed)
    nums = rng.integers(1, max_num + 1, n)
    dens = rng.integers(1, max_den + 1, n)
    return tuple(Fraction(int(a), int(b)) for a, b in zip(nums, dens))

