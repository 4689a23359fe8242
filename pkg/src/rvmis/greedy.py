"""Minimum-degree greedy and its weighted counterpart.

Both delete the chosen vertex with its closed neighbourhood and recompute
degrees in the surviving graph.  Ties go to the lowest vertex id, which the
adversarial generators rely on.
"""
from __future__ import annotations

import heapq
from fractions import Fraction

from .graph import Graph, Weights, as_weights


def _run(g: Graph, key) -> frozenset:
    deg = list(g.degrees)
    alive = [True] * g.n
    heap = [(key(v, deg[v]), v) for v in range(g.n)]
    heapq.heapify(heap)
    chosen = []
    while heap:
        k, v = heapq.heappop(heap)
        if not alive[v] or k != key(v, deg[v]):
            continue
        chosen.append(v)
        doomed = [v] + [u for u in g.adj[v] if alive[u]]
        for x in doomed:
            alive[x] = False
        for x in doomed:
            for y in g.adj[x]:
                if alive[y]:
                    deg[y] -= 1
                    heapq.heappush(heap, (key(y, deg[y]), y))
    return frozenset(chosen)


def greedy(g: Graph) -> frozenset:
    """Repeatedly take a minimum-degree vertex; maximal, size >= sum 1/(d(v)+1)."""
    return _run(g, lambda v, d: d)


def weighted_greedy(g: Graph, weights: Weights | None = None) -> frozenset:
    """Repeatedly take the vertex maximising ``w_v / (d_v + 1)`` in the surviving graph.

    Guarantees weight at least ``sum_v w_v / (d(v) + 1)`` over the input degrees.
    """
    w = as_weights(g.n, weights)
    return _run(g, lambda v, d: -Fraction(w[v], d + 1))
