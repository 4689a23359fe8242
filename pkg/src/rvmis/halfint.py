"""Optimal half-integral solutions of the independent-set LP relaxation.

The LP ``max sum w_i x_i  s.t.  x_i + x_j <= 1, 0 <= x <= 1`` is solved
exactly through a minimum cut in the bipartite double cover: vertex ``v``
becomes ``a_v`` (left) and ``b_v`` (right), each edge ``uv`` becomes
``a_u b_v`` and ``a_v b_u``.  A maximum-weight independent set of the cover,
read off the source side of a minimum cut, gives ``x_v = ([a_v] + [b_v]) / 2``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .graph import Graph, Weights, as_weights, scale_to_int
from .greedy import weighted_greedy

HALF = Fraction(1, 2)


class FlowNetwork:
    """Dinic max-flow on integer capacities (Python ints, so never overflows)."""

    def __init__(self, n: int):
        self.n = n
        self.head = [[] for _ in range(n)]
        self.to = []
        self.cap = []

    def add_edge(self, u: int, v: int, c: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _levels(self, s: int, t: int):
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for e in self.head[u]:
                v = self.to[e]
                if self.cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    q.append(v)
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        to, cap, head = self.to, self.cap, self.head
        while True:
            level = self._levels(s, t)
            if level is None:
                return flow
            it = [0] * self.n
            while True:
                # iterative DFS for one blocking-flow augmenting path
                path, u = [], s
                while u != t:
                    edges = head[u]
                    while it[u] < len(edges):
                        e = edges[it[u]]
                        v = to[e]
                        if cap[e] > 0 and level[v] == level[u] + 1:
                            break
                        it[u] += 1
                    else:
                        if u == s:
                            break
                        level[u] = -1  # dead end
                        u = to[path.pop() ^ 1]
                        it[u] += 1
                        continue
                    path.append(e)
                    u = v
                if u != t:
                    break
                push = min(cap[e] for e in path)
                for e in path:
                    cap[e] -= push
                    cap[e ^ 1] += push
                flow += push

    def source_side(self, s: int) -> list:
        """Vertices reachable from ``s`` in the residual network."""
        seen = [False] * self.n
        seen[s] = True
        q = deque([s])
        while q:
            u = q.popleft()
            for e in self.head[u]:
                v = self.to[e]
                if self.cap[e] > 0 and not seen[v]:
                    seen[v] = True
                    q.append(v)
        return seen


@dataclass(frozen=True)
class HalfIntegralSolution:
    assignment: tuple  # Fraction in {0, 1/2, 1} per vertex
    objective: Fraction
    zero: frozenset
    half: frozenset
    one: frozenset

    def is_feasible(self, g: Graph) -> bool:
        return all(self.assignment[u] + self.assignment[v] <= 1 for u, v in g.edges())

    def has_repair_property(self, g: Graph) -> bool:
        return all(any(u in self.one for u in g.adj[v]) for v in self.zero)


def nt_solve(g: Graph, weights: Weights | None = None) -> HalfIntegralSolution:
    """Optimal half-integral LP solution (Nemhauser-Trotter).

    Uses the minimum cut closest to the source, then moves any ZERO vertex
    without a ONE neighbour to HALF.  That repair never changes the
    objective (such a vertex must have weight 0 at an optimum) and keeps
    feasibility, and it guarantees every ZERO vertex is covered by ONE.
    """
    n = g.n
    w = as_weights(n, weights)
    ints, L = scale_to_int(w)
    s, t = 2 * n, 2 * n + 1
    net = FlowNetwork(2 * n + 2)
    inf = 2 * sum(ints) + 1
    for v in range(n):
        if ints[v]:
            net.add_edge(s, v, ints[v])
            net.add_edge(n + v, t, ints[v])
    for u, v in g.edges():
        net.add_edge(u, n + v, inf)
        net.add_edge(v, n + u, inf)
    net.max_flow(s, t)
    src = net.source_side(s)
    doubled = [int(src[v]) + int(not src[n + v]) for v in range(n)]
    one = {v for v in range(n) if doubled[v] == 2}
    for v in range(n):
        if doubled[v] == 0 and not any(u in one for u in g.adj[v]):
            doubled[v] = 1
    assignment = tuple(Fraction(x, 2) for x in doubled)
    objective = sum((w[v] * assignment[v] for v in range(n)), Fraction(0))
    return HalfIntegralSolution(
        assignment,
        objective,
        frozenset(v for v in range(n) if doubled[v] == 0),
        frozenset(v for v in range(n) if doubled[v] == 1),
        frozenset(one),
    )


def rv_lp_weights(g: Graph, weights: Weights | None = None) -> Weights:
    w = as_weights(g.n, weights)
    return tuple(w[v] / (g.degree(v) + 1) for v in range(g.n))


def rv_lp_round(g: Graph, weights: Weights | None = None, solution: HalfIntegralSolution | None = None) -> frozenset:
    """Round the recoverable-value LP: keep ONE, drop ZERO, weighted greedy on HALF.

    ``solution`` may supply a specific optimal half-integral solution of the
    RV LP (e.g. the all-half one); by default :func:`nt_solve` picks one.
    The output weight is at least twice the RV-LP optimum.
    """
    for v in range(g.n):
        if g.degree(v) == 0:
            raise PreconditionError(
                f"vertex {v} is isolated; include isolated vertices in the answer and remove them first",
                vertex=v,
            )
    w = as_weights(g.n, weights)
    if solution is None:
        solution = nt_solve(g, rv_lp_weights(g, w))
    sub = g.induced(solution.half)
    picked = weighted_greedy(sub.graph, tuple(w[v] for v in sub.vertices))
    return frozenset(solution.one) | sub.lift(picked)
