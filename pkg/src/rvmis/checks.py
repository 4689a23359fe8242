"""Oracle-backed invariant checks for a single instance.

Each check raises :class:`InvariantBreach` on failure and otherwise returns
a short description; :func:`check_instance` runs every check that applies.
"""
from __future__ import annotations

from fractions import Fraction
from math import ceil

from .avg2 import solve_avg2
from .classic import greedy, lp_plus_greedy, weighted_greedy
from .errors import InvariantBreach
from .exact import BNB_LIMIT, LP_BRUTE_LIMIT, alpha, lp_half_bruteforce, mwis_exact, mwis_value, rv_maximizer
from .graph import Graph, as_weights, weight_of
from .halfint import nt_solve, rv_lp_round
from .layered import layer_decompose, prefix_graph
from .reductions import reduce_low_degree, replay


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise InvariantBreach(message)


def check_reductions(g: Graph, weights=None) -> str:
    for mode in ("mis", "mwis"):
        w = None if mode == "mis" else as_weights(g.n, weights)
        red = reduce_low_degree(g, w, mode=mode)
        replay(g, red.trace, w, mode=mode)
        lifted = red.trace.lift(mwis_exact(red.graph, red.weights))
        g.check_independent(lifted)
        _require(weight_of(lifted, w) == mwis_value(g, w), f"{mode}-mode lifting lost weight")
        _require(red.trace.credit() + mwis_value(red.graph, red.weights) == mwis_value(g, w), f"{mode}-mode credit mismatch")
    return "reduction lifting is optimal in both modes"


def check_half_integral(g: Graph, weights=None) -> str:
    sol = nt_solve(g, weights)
    _require(sol.is_feasible(g), "half-integral solution violates an edge constraint")
    _require(sol.has_repair_property(g), "a ZERO vertex has no ONE neighbour")
    if g.n <= LP_BRUTE_LIMIT:
        _require(sol.objective == lp_half_bruteforce(g, weights), "half-integral objective is not optimal")
        return "half-integral LP optimal and feasible"
    return "half-integral LP feasible"


def check_rv_lp(g: Graph, weights=None) -> str | None:
    if g.n == 0 or g.min_degree == 0:
        return None
    w = as_weights(g.n, weights)
    got = weight_of(rv_lp_round(g, w), w)
    share = [w[v] / (g.degree(v) + 1) for v in range(g.n)]
    best = rv_maximizer(g, 2, w)
    _require(got >= 2 * sum(share[v] for v in best), "RV-LP rounding below twice the reference share")
    _require(got >= sum(share), "RV-LP rounding below the degree-share bound")
    return "RV-LP rounding bounds hold"


def check_ratios(g: Graph) -> list:
    out = []
    opt = alpha(g)
    for name, fn in (("greedy", greedy), ("lp_plus_greedy", lp_plus_greedy), ("weighted_greedy", weighted_greedy)):
        g.check_independent(fn(g))
    if g.n and g.d_avg >= 2:
        need = ceil(Fraction(5) / (2 * g.d_avg + 3) * opt)
        _require(len(lp_plus_greedy(g)) >= need, "LP + greedy below 5/(2 d_avg + 3) of optimum")
        out.append("LP + greedy ratio holds")
    if g.n == 0 or g.d_avg <= 2:
        res = solve_avg2(g)
        g.check_independent(res.members)
        _require(len(res.members) >= ceil(Fraction(7, 9) * opt), "average-degree-2 solver below 7/9")
        out.append("average-degree-2 ratio holds")
    return out


def check_layers(g: Graph, seeds=range(3)) -> str:
    for s in seeds:
        d = layer_decompose(g, s)
        for k in (1, 2, 3):
            prefix_graph(d, k)  # certifies degeneracy, and acyclicity for k = 2
    return "prefix graphs certified"


def check_instance(g: Graph, weights=None, oracle_limit: int = BNB_LIMIT) -> list:
    """Run all applicable checks; returns descriptions of those that passed."""
    out = [check_half_integral(g, weights), check_layers(g)]
    if g.n <= oracle_limit:
        out.append(check_reductions(g, weights))
        rv = check_rv_lp(g, weights)
        if rv:
            out.append(rv)
        out.extend(check_ratios(g))
    return out
