"""7/9-approximation of MIS on graphs of average degree at most 2.

Vertices migrate from a kernel part ``V1`` to a solved part ``V2`` by four
simplifications, always applying the lowest-numbered applicable one to the
lowest-id vertex:

0. an isolated kernel vertex moves;
1. a kernel vertex of kernel-degree 1 moves with its neighbour;
2. a kernel vertex ``v1`` of kernel-degree 2 with neighbours ``v2 < v3``:
   if they are adjacent all three move; otherwise ``v1`` and ``v2`` move and
   ``v2``'s other kernel neighbours are rewired to ``v3``;
3. vertices with integral value in an optimal half-integral LP solution of
   the kernel move.

Each step designates vertices of ``V2`` (the isolated vertex, the pendant,
``v1`` of a triangle, ``v2`` of a rewire, the LP ones) whose union is a
maximum independent set of ``H2`` with no edge into ``V1``.  Greedy then
runs on the kernel, and the rewires are undone in reverse.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, InducedSubgraph, build_graph
from .greedy import greedy
from .halfint import nt_solve
from .reductions import Isolated, NTFix, PendantUnweighted, ReductionTrace, RewireDeg2, TriangleDeg2


@dataclass(frozen=True)
class Partition12:
    graph: Graph  # the input with all rewiring applied
    v1: frozenset
    v2: frozenset
    h1: InducedSubgraph
    h2: InducedSubgraph
    designated: frozenset  # I2


@dataclass(frozen=True)
class Avg2Result:
    members: frozenset
    guaranteed: bool  # input average degree <= 2, so the 7/9 bound applies
    partition: Partition12
    trace: ReductionTrace
    kernel_set: frozenset  # I1, greedy's answer on H1 (original ids)


def simplify(g: Graph) -> tuple:
    """Run the simplification loop to its fixpoint; returns ``(Partition12, ReductionTrace)``."""
    adj = [set(a) for a in g.adj]
    in1 = [True] * g.n
    events, designated = [], []

    def kdeg(v):
        return sum(1 for u in adj[v] if in1[u])

    def knbrs(v):
        return sorted(u for u in adj[v] if in1[u])

    while True:
        kernel = [v for v in range(g.n) if in1[v]]
        if not kernel:
            break
        degs = {v: kdeg(v) for v in kernel}
        pick = None
        for rule in (0, 1, 2):
            pick = next((v for v in kernel if degs[v] == rule), None)
            if pick is not None:
                break
        if pick is None:
            verts = kernel
            index = {v: i for i, v in enumerate(verts)}
            sub = build_graph(len(verts), [(index[u], index[v]) for u in verts for v in adj[u] if in1[v] and u < v])
            sol = nt_solve(sub)
            if not sol.one and not sol.zero:
                break
            ones = tuple(sorted(verts[i] for i in sol.one))
            zeros = tuple(sorted(verts[i] for i in sol.zero))
            for v in ones + zeros:
                in1[v] = False
            designated.extend(ones)
            events.append(NTFix(ones, zeros))
            continue
        v = pick
        if rule == 0:
            in1[v] = False
            designated.append(v)
            events.append(Isolated(v))
        elif rule == 1:
            (x,) = knbrs(v)
            in1[v] = in1[x] = False
            designated.append(v)
            events.append(PendantUnweighted(v, x))
        else:
            v2, v3 = knbrs(v)
            if v3 in adj[v2]:
                in1[v] = in1[v2] = in1[v3] = False
                designated.append(v)
                events.append(TriangleDeg2(v, v2, v3))
            else:
                moved = tuple(x for x in knbrs(v2) if x != v)
                for x in moved:
                    adj[v2].discard(x)
                    adj[x].discard(v2)
                    adj[x].add(v3)
                    adj[v3].add(x)
                in1[v] = in1[v2] = False
                designated.append(v2)
                events.append(RewireDeg2(v, v2, v3, moved))

    rewired = build_graph(g.n, [(u, v) for u in range(g.n) for v in adj[u] if u < v])
    v1 = frozenset(v for v in range(g.n) if in1[v])
    v2set = frozenset(range(g.n)) - v1
    h1 = rewired.induced(v1)
    part = Partition12(rewired, v1, v2set, h1, rewired.induced(v2set), frozenset(designated))
    trace = ReductionTrace(g.n, tuple(events), h1.graph, h1.vertices)
    return part, trace


def solve_avg2(g: Graph) -> Avg2Result:
    """Greedy on the simplified kernel plus the designated set, lifted to ``g``.

    The 7/9 approximation ratio holds when the average degree is at most 2;
    other inputs are solved all the same with ``guaranteed=False``.
    """
    part, trace = simplify(g)
    local = greedy(part.h1.graph)
    members = trace.lift(local)
    guaranteed = g.n == 0 or Fraction(2 * g.m, g.n) <= 2
    return Avg2Result(members, guaranteed, part, trace, part.h1.lift(local))


def g_poly(x, y) -> Fraction:
    """``4x^2 + 2y^2 - 2x - 12xy - 9y + 7``, exactly."""
    x, y = Fraction(x), Fraction(y)
    return 4 * x * x + 2 * y * y - 2 * x - 12 * x * y - 9 * y + 7


def ratio_bound(c, a) -> Fraction:
    """Lower bound on the approximation ratio given kernel edge density ``c`` and independence ratio ``a``."""
    c, a = Fraction(c), Fraction(a)
    return (c - 1 + (1 + a * a) / (2 * c + 1 + a)) / (c - 1 + a)
