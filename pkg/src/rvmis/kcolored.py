"""2/k-approximations of MIS on graphs that come with a proper k-colouring."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import InvariantBreach, NotIndependentError
from .graph import Graph
from .halfint import nt_solve
from .layered import LayerDecomposition, prefix_graph


class ImproperColoringError(NotIndependentError):
    """Two endpoints of ``edge`` share a class."""

    def __init__(self, edge):
        super().__init__(edge, f"colouring is not proper: edge {tuple(edge)} is monochromatic")


@dataclass(frozen=True)
class Coloring:
    k: int
    color: tuple

    def __post_init__(self):
        if any(not 0 <= c < self.k for c in self.color):
            raise ValueError(f"colours must lie in [0, {self.k})")

    def classes(self) -> list:
        out = [[] for _ in range(self.k)]
        for v, c in enumerate(self.color):
            out[c].append(v)
        return [tuple(c) for c in out]

    def check(self, g: Graph) -> "Coloring":
        if len(self.color) != g.n:
            raise ValueError(f"colouring has {len(self.color)} entries for {g.n} vertices")
        for u, v in g.edges():
            if self.color[u] == self.color[v]:
                raise ImproperColoringError((u, v))
        return self


def color_from_permutation(d: LayerDecomposition, k: int) -> tuple:
    """First-fit colouring of ``G_k`` along the permutation.

    Returns ``(PrefixGraph, Coloring)``; the colouring is indexed by the
    prefix graph's local ids.  Every vertex of ``G_k`` has at most ``k - 1``
    earlier neighbours, so ``k`` colours always suffice.
    """
    p = prefix_graph(d, k)
    local = {v: i for i, v in enumerate(p.vertices)}
    color = [-1] * len(p.vertices)
    for v in d.permutation:
        i = local.get(v)
        if i is None:
            continue
        used = {color[j] for j in p.graph.adj[i] if color[j] >= 0}
        c = next(c for c in range(len(used) + 1) if c not in used)
        if c >= k:
            raise InvariantBreach(f"first-fit needed more than {k} colours at vertex {v}")
        color[i] = c
    return p, Coloring(k, tuple(color)).check(p.graph)


# -- bipartite MIS ----------------------------------------------------------

def _hopcroft_karp(g: Graph, left: Sequence[int]) -> dict:
    """Maximum matching as a dict covering both directions."""
    INF = float("inf")
    mate = {}
    dist = {}

    def bfs():
        q = deque()
        for u in left:
            if u not in mate:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = INF
        found = False
        while q:
            u = q.popleft()
            for v in g.adj[u]:
                w = mate.get(v)
                if w is None:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return found

    def augment(root):
        # iterative DFS along the BFS layering
        stack = [(root, iter(g.adj[root]))]
        path = []
        while stack:
            u, it = stack[-1]
            for v in it:
                w = mate.get(v)
                if w is None:
                    path.append((u, v))
                    for a, b in path:
                        mate[a] = b
                        mate[b] = a
                    return True
                if dist[w] == dist[u] + 1:
                    path.append((u, v))
                    stack.append((w, iter(g.adj[w])))
                    break
            else:
                dist[u] = INF
                stack.pop()
                if path:
                    path.pop()
        return False

    while bfs():
        for u in left:
            if u not in mate:
                augment(u)
    return mate


def bipartite_mis_exact(g: Graph, sides: Sequence[int]) -> frozenset:
    """Maximum independent set of a bipartite graph via König's theorem.

    ``sides[v]`` is 0 or 1.  The minimum vertex cover is ``(L - Z) | (R & Z)``
    where ``Z`` is everything reachable from unmatched left vertices by
    alternating paths; its complement is returned.
    """
    if len(sides) != g.n:
        raise ValueError("need one side label per vertex")
    for u, v in g.edges():
        if sides[u] == sides[v]:
            raise ImproperColoringError((u, v))
    left = [v for v in range(g.n) if sides[v] == 0]
    mate = _hopcroft_karp(g, left)
    reach = set(v for v in left if v not in mate)
    q = deque(reach)
    while q:
        u = q.popleft()  # a left vertex
        for v in g.adj[u]:
            if v not in reach:
                reach.add(v)
                w = mate.get(v)
                if w is not None and w not in reach:
                    reach.add(w)
                    q.append(w)
    cover = {v for v in range(g.n) if (sides[v] == 0) != (v in reach)}
    result = frozenset(range(g.n)) - cover
    if len(result) != g.n - len(mate) // 2:
        raise InvariantBreach("König construction disagrees with the matching size")
    return result


def best_pair_approx(g: Graph, c: Coloring) -> frozenset:
    """Best exact MIS over the subgraphs induced by pairs of colour classes."""
    c.check(g)
    if c.k == 1:
        return frozenset(range(g.n))
    best = None
    for a, b in combinations(range(c.k), 2):
        sub = g.induced(v for v in range(g.n) if c.color[v] in (a, b))
        found = bipartite_mis_exact(sub.graph, [int(c.color[v] == b) for v in sub.vertices])
        if best is None or len(found) > len(best):
            best = sub.lift(found)
    return best


def lp_largest_class_approx(g: Graph, c: Coloring) -> frozenset:
    """ONE of a half-integral LP optimum plus the largest colour class inside HALF."""
    c.check(g)
    sol = nt_solve(g)
    counts = [0] * c.k
    for v in sol.half:
        counts[c.color[v]] += 1
    top = max(range(c.k), key=lambda i: (counts[i], -i))
    return frozenset(sol.one) | frozenset(v for v in sol.half if c.color[v] == top)
