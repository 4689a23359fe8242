"""Immutable simple graphs, vertex weights and the recoverable-value functional."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .errors import GraphError, NotIndependentError

Weights = tuple  # tuple[Fraction, ...], one entry per vertex


def as_fraction(x) -> Fraction:
    """Exact conversion; accepts ints, Fractions, floats and strings such as ``"7/3"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``.  Instances are
    never mutated; every edit returns a new graph.
    """

    n: int
    adj: tuple = field(repr=False)

    @property
    def m(self) -> int:
        return self.edge_count

    @cached_property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def degrees(self) -> tuple:
        return tuple(len(a) for a in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple:
        return self.adj[v]

    @cached_property
    def _adj_sets(self) -> tuple:
        return tuple(frozenset(a) for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def edges(self) -> Iterator[tuple]:
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    @property
    def d_avg(self) -> Fraction:
        if self.n == 0:
            raise GraphError("average degree of the empty graph is undefined")
        return Fraction(2 * self.m, self.n)

    @property
    def min_degree(self) -> int:
        return min(self.degrees) if self.n else 0

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.n else 0

    @cached_property
    def csr(self) -> tuple:
        """``(indptr, indices)`` int64 arrays for the numeric kernels."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(self.degrees, out=indptr[1:])
        indices = np.fromiter((u for a in self.adj for u in a), dtype=np.int64, count=int(indptr[-1]))
        return indptr, indices

    @cached_property
    def adj_masks(self) -> tuple:
        """Neighbourhoods as Python-int bitmasks."""
        out = []
        for nbrs in self.adj:
            m = 0
            for u in nbrs:
                m |= 1 << u
            out.append(m)
        return tuple(out)

    # -- independence -------------------------------------------------

    def violating_edge(self, s: Iterable[int]):
        """An edge with both ends in ``s``, or ``None``."""
        s = set(s)
        for u in sorted(s):
            if not 0 <= u < self.n:
                raise GraphError(f"vertex {u} not in graph with n={self.n}")
            for v in self.adj[u]:
                if v > u and v in s:
                    return (u, v)
        return None

    def is_independent(self, s: Iterable[int]) -> bool:
        return self.violating_edge(s) is None

    def check_independent(self, s: Iterable[int]) -> frozenset:
        s = frozenset(s)
        e = self.violating_edge(s)
        if e is not None:
            raise NotIndependentError(e)
        return s

    # -- structure ----------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> "InducedSubgraph":
        verts = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(verts)}
        adj = tuple(tuple(index[u] for u in self.adj[v] if u in index) for v in verts)
        return InducedSubgraph(Graph(len(verts), adj), verts)

    def without(self, removed: Iterable[int]) -> "InducedSubgraph":
        removed = set(removed)
        return self.induced(v for v in range(self.n) if v not in removed)

    def components(self) -> list:
        """Connected components as sorted vertex lists, ordered by smallest member."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


class InducedSubgraph(NamedTuple):
    """A graph together with the original id of each of its vertices."""

    graph: Graph
    vertices: tuple

    def lift(self, local: Iterable[int]) -> frozenset:
        return frozenset(self.vertices[i] for i in local)

    def local(self, original: Iterable[int]) -> frozenset:
        index = {v: i for i, v in enumerate(self.vertices)}
        return frozenset(index[v] for v in original if v in index)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and return the simple graph it describes.

    Repeated pairs, in either orientation, collapse into one edge.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs = [set() for _ in range(n)]
    for pair in edges:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop {(u, v)}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def graph_from_adjacency(adj: Sequence[Iterable[int]]) -> Graph:
    """Build from a possibly asymmetric adjacency list (symmetrised)."""
    return build_graph(len(adj), ((u, v) for u, a in enumerate(adj) for v in a))


def disjoint_union(*graphs: Graph) -> Graph:
    edges, off = [], 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges())
        off += g.n
    return build_graph(off, edges)


class MergeResult(NamedTuple):
    graph: Graph
    mapping: tuple  # old id -> new id; both merged vertices map to ``merged``
    merged: int


def merge_vertices(g: Graph, v: int, w: int) -> MergeResult:
    """Contract two non-adjacent vertices into a new vertex ``u'``.

    The surviving vertices keep their relative order and ``u'`` receives
    the last id.  Parallel edges collapse, so ``d(u') = |N(v) ∪ N(w)|``.
    """
    if v == w:
        raise GraphError("cannot merge a vertex with itself")
    if g.has_edge(v, w):
        raise GraphError(f"cannot merge adjacent vertices {v} and {w}")
    keep = [x for x in range(g.n) if x != v and x != w]
    merged = len(keep)
    mapping = [0] * g.n
    for i, x in enumerate(keep):
        mapping[x] = i
    mapping[v] = mapping[w] = merged
    edges = {tuple(sorted((mapping[a], mapping[b]))) for a, b in g.edges()}
    return MergeResult(build_graph(merged + 1, edges), tuple(mapping), merged)


# -- weights ----------------------------------------------------------

def unit_weights(n: int) -> Weights:
    return (Fraction(1),) * n


def as_weights(n: int, weights=None) -> Weights:
    """Normalise ``weights`` (``None`` means unit) to a tuple of Fractions."""
    if weights is None:
        return unit_weights(n)
    w = tuple(as_fraction(x) for x in weights)
    if len(w) != n:
        raise GraphError(f"expected {n} weights, got {len(w)}")
    if any(x < 0 for x in w):
        raise GraphError("weights must be non-negative")
    return w


def weight_of(s: Iterable[int], weights: Weights | None = None) -> Fraction:
    s = list(s)
    if weights is None:
        return Fraction(len(s))
    return sum((weights[v] for v in s), Fraction(0))


def scale_to_int(weights: Sequence[Fraction]) -> tuple:
    """Return ``(ints, L)`` with ``weights[i] == ints[i] / L`` exactly."""
    L = 1
    for x in weights:
        L = lcm(L, x.denominator)
    return [int(x * L) for x in weights], L


# -- recoverable value ------------------------------------------------

def rv_term(degree: int, rho: Fraction) -> Fraction:
    """``min(1, rho / (degree + 1))``."""
    return min(Fraction(1), rho / (degree + 1))


@dataclass(frozen=True)
class RVReport:
    rho: Fraction
    reference_set: frozenset
    per_vertex: tuple  # ((vertex, contribution), ...) sorted by vertex
    total: Fraction


def recoverable_value(g: Graph, i: Iterable[int], rho, weights: Weights | None = None) -> RVReport:
    """Per-vertex ``w_v * min(1, rho/(d(v)+1))`` over an independent set, and their sum."""
    rho = as_fraction(rho)
    members = g.check_independent(i)
    per = []
    for v in sorted(members):
        c = rv_term(g.degree(v), rho)
        if weights is not None:
            c *= weights[v]
        per.append((v, c))
    return RVReport(rho, members, tuple(per), sum((c for _, c in per), Fraction(0)))


def rv_weights(g: Graph, rho, weights: Weights | None = None) -> Weights:
    """Vertex weights whose maximum-weight independent set maximises the recoverable value."""
    rho = as_fraction(rho)
    w = as_weights(g.n, weights)
    return tuple(w[v] * rv_term(g.degree(v), rho) for v in range(g.n))


def expected_capture(g: Graph, s: Iterable[int], k: int) -> Fraction:
    """Sum over ``s`` of the probability that a uniform permutation puts v in layers 1..k."""
    if k < 1:
        raise ValueError("k must be positive")
    total = Fraction(0)
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph")
        total += min(Fraction(1), Fraction(k, g.degree(v) + 1))
    return total
