"""Low-degree eliminations with exact lifting back to the input graph.

Working ids are the input ids throughout: a 2-elimination merge reuses the
id of the lower neighbour for the contracted vertex, so every event names
vertices that exist at its point in the sequence.  The reduced graph is
relabelled ``0..m-1`` and ``ReductionTrace.survivors`` maps back.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import InvariantBreach
from .graph import Graph, Weights, as_fraction, as_weights, build_graph

RHO_2ELIM_MAX = Fraction(10, 3)


@dataclass(frozen=True)
class Isolated:
    v: int
    gain: Fraction = Fraction(1)


@dataclass(frozen=True)
class PendantUnweighted:
    """Degree-1 ``u`` joins the solution; ``u`` and its neighbour ``v`` are removed."""

    u: int
    v: int
    gain: Fraction = Fraction(1)


@dataclass(frozen=True)
class PendantWeighted:
    """Degree-1 ``u`` is removed and ``v``'s weight drops by ``transferred`` (= w_u < w_v)."""

    u: int
    v: int
    transferred: Fraction

    @property
    def gain(self) -> Fraction:
        return self.transferred


@dataclass(frozen=True)
class TriangleDeg2:
    """Degree-2 ``u`` whose neighbours ``v, w`` are adjacent; all three removed, ``u`` kept."""

    u: int
    v: int
    w: int
    gain: Fraction = Fraction(1)


@dataclass(frozen=True)
class MergeDeg2:
    """Degree-2 ``u`` removed, non-adjacent neighbours ``v, w`` contracted into ``merged``."""

    u: int
    v: int
    w: int
    merged: int
    gain: Fraction = Fraction(1)


@dataclass(frozen=True)
class RewireDeg2:
    """``v1`` and ``v2`` leave the kernel; ``v2``'s kernel neighbours ``moved`` are handed to ``v3``."""

    v1: int
    v2: int
    v3: int
    moved: tuple
    gain: Fraction = Fraction(1)


@dataclass(frozen=True)
class NTFix:
    """Vertices with integral LP value leave the kernel; ``ones`` join the solution."""

    ones: tuple
    zeros: tuple

    @property
    def gain(self) -> Fraction:
        return Fraction(len(self.ones))


@dataclass(frozen=True)
class ReductionTrace:
    n_original: int
    events: tuple
    reduced: Graph
    survivors: tuple  # reduced id -> working id

    def credit(self) -> Fraction:
        """Total weight (size, for unit weights) that lifting adds."""
        return sum((e.gain for e in self.events), Fraction(0))

    def lift(self, reduced_solution: Iterable[int]) -> frozenset:
        """Map an independent set of the reduced graph to one of the original graph."""
        sol = self.reduced.check_independent(reduced_solution)
        s = {self.survivors[i] for i in sol}
        for e in reversed(self.events):
            if isinstance(e, (Isolated,)):
                s.add(e.v)
            elif isinstance(e, (PendantUnweighted, TriangleDeg2)):
                s.add(e.u)
            elif isinstance(e, PendantWeighted):
                if e.v not in s:
                    s.add(e.u)
            elif isinstance(e, MergeDeg2):
                if e.merged in s:
                    s.discard(e.merged)
                    s.update((e.v, e.w))
                else:
                    s.add(e.u)
            elif isinstance(e, RewireDeg2):
                s.add(e.v2 if e.v3 in s else e.v1)
            elif isinstance(e, NTFix):
                s.update(e.ones)
            else:  # pragma: no cover
                raise TypeError(f"unknown event {e!r}")
        return frozenset(s)


class _Work:
    """Mutable adjacency used while eliminating."""

    def __init__(self, g: Graph, w: Weights):
        self.adj = {v: set(g.adj[v]) for v in range(g.n)}
        self.w = dict(enumerate(w))

    def remove(self, v: int) -> list:
        nbrs = self.adj.pop(v)
        self.w.pop(v)
        for u in nbrs:
            self.adj[u].discard(v)
        return list(nbrs)

    def merge(self, a: int, b: int) -> list:
        """Contract ``b`` into ``a``; returns vertices whose degree may have changed."""
        nb = self.adj.pop(b)
        self.w.pop(b)
        touched = [a]
        for x in nb:
            self.adj[x].discard(b)
            if x not in self.adj[a]:
                self.adj[x].add(a)
                self.adj[a].add(x)
            touched.append(x)
        return touched

    def freeze(self, n_original: int):
        survivors = tuple(sorted(self.adj))
        index = {v: i for i, v in enumerate(survivors)}
        edges = [(index[u], index[v]) for u in survivors for v in self.adj[u] if u < v]
        return build_graph(len(survivors), edges), tuple(self.w[v] for v in survivors), survivors


class Reduction(NamedTuple):
    graph: Graph
    weights: Weights
    trace: ReductionTrace


def _apply(work: _Work, e) -> list:
    """Apply one event to ``work``; returns vertices whose degree changed."""
    if isinstance(e, Isolated):
        return work.remove(e.v)
    if isinstance(e, PendantUnweighted):
        work.remove(e.u)
        return work.remove(e.v)
    if isinstance(e, PendantWeighted):
        work.w[e.v] -= e.transferred
        return work.remove(e.u)
    if isinstance(e, TriangleDeg2):
        touched = work.remove(e.u) + work.remove(e.v) + work.remove(e.w)
        return [x for x in touched if x in work.adj]
    if isinstance(e, MergeDeg2):
        work.remove(e.u)
        return work.merge(e.merged, e.w if e.merged == e.v else e.v)
    raise TypeError(f"event {e!r} is not a low-degree elimination")


def reduce_low_degree(g: Graph, weights: Weights | None = None, mode: str = "mis", rho=Fraction(7, 3)) -> Reduction:
    """Eliminate degree-0/1 vertices (and, for MIS, degree-2 vertices) until none remain.

    ``mode="mwis"`` applies the weighted pendant rule and stops at minimum
    degree 2.  ``mode="mis"`` ignores weights and also applies
    2-elimination, reaching minimum degree 3, but only when the target
    ``rho`` is at most 10/3, the range in which 2-elimination cannot lower
    the recoverable value.  The lowest-id eligible vertex goes first,
    preferring degree 0, then 1, then 2.
    """
    if mode not in ("mis", "mwis"):
        raise ValueError(f"mode must be 'mis' or 'mwis', got {mode!r}")
    rho = as_fraction(rho)
    w = as_weights(g.n, None if mode == "mis" else weights)
    max_rule = 2 if mode == "mis" and rho <= RHO_2ELIM_MAX else 1
    work = _Work(g, w)
    events = []
    heap = [(len(work.adj[v]), v) for v in work.adj]
    heapq.heapify(heap)
    while heap:
        d, v = heapq.heappop(heap)
        if v not in work.adj or len(work.adj[v]) != d:
            continue
        if d > max_rule:
            break
        if d == 0:
            e = Isolated(v, work.w[v])
        elif d == 1:
            (x,) = work.adj[v]
            if mode == "mis" or work.w[v] >= work.w[x]:
                e = PendantUnweighted(v, x, work.w[v])
            else:
                e = PendantWeighted(v, x, work.w[v])
        else:
            a, b = sorted(work.adj[v])
            e = TriangleDeg2(v, a, b) if b in work.adj[a] else MergeDeg2(v, a, b, a)
        events.append(e)
        for x in _apply(work, e):
            if x in work.adj:
                heapq.heappush(heap, (len(work.adj[x]), x))
    graph, wout, survivors = work.freeze(g.n)
    trace = ReductionTrace(g.n, tuple(events), graph, survivors)
    return Reduction(graph, wout, trace)


def replay(g: Graph, trace: ReductionTrace, weights: Weights | None = None, mode: str = "mis") -> Reduction:
    """Re-apply ``trace`` to ``g`` from scratch, checking each event's preconditions."""
    work = _Work(g, as_weights(g.n, None if mode == "mis" else weights))
    for e in trace.events:
        names = [getattr(e, f) for f in ("v", "u", "w") if hasattr(e, f) and isinstance(getattr(e, f), int)]
        if any(x not in work.adj for x in names):
            raise InvariantBreach(f"event {e} refers to a vertex that no longer exists")
        if isinstance(e, Isolated) and work.adj[e.v]:
            raise InvariantBreach(f"{e}: vertex is not isolated")
        if isinstance(e, (PendantUnweighted, PendantWeighted)) and work.adj[e.u] != {e.v}:
            raise InvariantBreach(f"{e}: vertex is not a pendant of {e.v}")
        if isinstance(e, (TriangleDeg2, MergeDeg2)) and work.adj[e.u] != {e.v, e.w}:
            raise InvariantBreach(f"{e}: vertex does not have exactly these two neighbours")
        _apply(work, e)
    graph, wout, _ = work.freeze(g.n)
    return Reduction(graph, wout, trace)
