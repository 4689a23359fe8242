"""Exact ground truth: maximum (weight) independent sets and the half-integral LP optimum.

Everything here is exhaustive or branch-and-bound and refuses inputs above
its size limit instead of degrading to a heuristic.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import OracleLimitError
from .graph import Graph, Weights, as_weights, rv_weights, scale_to_int

BNB_LIMIT = 40
LP_BRUTE_LIMIT = 12
ENUM_LIMIT = 22


class _BranchAndBound:
    """Bitmask branch-and-bound over integer weights.

    Branches include/exclude on a maximum-degree candidate (lowest id on
    ties); prunes with a greedy clique-cover bound, which is the weighted
    analogue of colouring the complement.
    """

    def __init__(self, masks, weights):
        self.masks = masks
        self.w = weights
        n = len(weights)
        self.order = sorted(range(n), key=lambda v: (-weights[v], v))

    def _bound(self, cand: int) -> int:
        commons, total = [], 0
        masks, w = self.masks, self.w
        for v in self.order:
            if not (cand >> v) & 1:
                continue
            for i, c in enumerate(commons):
                if (c >> v) & 1:
                    commons[i] = c & masks[v]
                    break
            else:
                commons.append(masks[v])
                total += w[v]
        return total

    def _rec(self, cand: int, acc: int) -> None:
        if self.best >= self.stop:
            return
        masks, w = self.masks, self.w
        best_v, best_deg, iso_w, iso = -1, -1, 0, 0
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            d = (masks[v] & cand).bit_count()
            if d == 0:
                iso |= low
                iso_w += w[v]
            elif d > best_deg:
                best_deg, best_v = d, v
        if iso:
            acc += iso_w
            cand &= ~iso
        if not cand:
            if acc > self.best:
                self.best = acc
            return
        if acc + self._bound(cand) <= self.best:
            return
        v = best_v
        bit = 1 << v
        self._rec(cand & ~masks[v] & ~bit, acc + w[v])
        self._rec(cand & ~bit, acc)

    def maximum(self, cand: int) -> int:
        self.best, self.stop = -1, float("inf")
        self._rec(cand, 0)
        return self.best

    def reaches(self, cand: int, target: int) -> bool:
        """Is there an independent subset of ``cand`` with weight >= target?"""
        if target <= 0:
            return True
        self.best, self.stop = target - 1, target
        self._rec(cand, 0)
        return self.best >= target


def _prepare(g: Graph, weights, limit: int):
    if g.n > limit:
        raise OracleLimitError(f"exact oracle limited to n <= {limit}, got n = {g.n}")
    w = as_weights(g.n, weights)
    ints, L = scale_to_int(w)
    return _BranchAndBound(g.adj_masks, ints), L


def mwis_value(g: Graph, weights: Weights | None = None, limit: int = BNB_LIMIT) -> Fraction:
    """Optimum weight (size, for unit weights) of an independent set."""
    bb, L = _prepare(g, weights, limit)
    return Fraction(max(bb.maximum((1 << g.n) - 1), 0), L)


def alpha(g: Graph, limit: int = BNB_LIMIT) -> int:
    return int(mwis_value(g, None, limit))


def mwis_exact(g: Graph, weights: Weights | None = None, limit: int = BNB_LIMIT) -> frozenset:
    """A maximum-weight independent set; the lexicographically smallest among optima.

    The optimum is computed once, then vertices are fixed in increasing id
    order, keeping each one whenever an optimum extending the current
    choice still exists.
    """
    bb, _ = _prepare(g, weights, limit)
    full = (1 << g.n) - 1
    target = max(bb.maximum(full), 0)
    chosen, acc, cand = [], 0, full
    for v in range(g.n):
        if not (cand >> v) & 1:
            continue
        rest = cand & ~bb.masks[v] & ~((1 << (v + 1)) - 1)
        if bb.reaches(rest, target - acc - bb.w[v]):
            chosen.append(v)
            acc += bb.w[v]
            cand = rest
        else:
            cand &= ~(1 << v)
    return frozenset(chosen)


def rv_maximizer(g: Graph, rho, weights: Weights | None = None, limit: int = BNB_LIMIT) -> frozenset:
    """The independent set maximising ``sum w_v min(1, rho/(d(v)+1))``."""
    return mwis_exact(g, rv_weights(g, rho, weights), limit)


def max_recoverable_value(g: Graph, rho, weights: Weights | None = None, limit: int = BNB_LIMIT) -> Fraction:
    return mwis_value(g, rv_weights(g, rho, weights), limit)


# -- exhaustive enumerators (independent of the branch-and-bound) ------

def _int_vector(ints, bound):
    if max(ints, default=0) * bound < 2 ** 62:
        return np.asarray(ints, dtype=np.int64)
    return np.asarray(ints, dtype=object)


def mwis_enumerate(g: Graph, weights: Weights | None = None, limit: int = ENUM_LIMIT) -> tuple:
    """``(optimum, lexicographically smallest optimal set)`` by checking all 2^n subsets."""
    if g.n > limit:
        raise OracleLimitError(f"subset enumeration limited to n <= {limit}, got n = {g.n}")
    w = as_weights(g.n, weights)
    ints, L = scale_to_int(w)
    n = g.n
    subsets = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(subsets.shape, dtype=bool)
    for u, v in g.edges():
        ok &= ((subsets >> u) & 1) & ((subsets >> v) & 1) == 0
    cand = subsets[ok]
    bits = ((cand[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(np.int64)
    vals = bits @ _int_vector(ints, n) if n else np.zeros(len(cand), dtype=np.int64)
    best = vals.max()
    optimal = cand[vals == best]
    sets = [tuple(v for v in range(n) if (int(s) >> v) & 1) for s in optimal]
    return Fraction(int(best), L), frozenset(min(sets))


@lru_cache(maxsize=4)
def _half_grid(n: int) -> np.ndarray:
    """All vectors of {0,1,2}^n (doubled half-integral assignments)."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    return np.indices((3,) * n, dtype=np.int8).reshape(n, -1).T.copy()


def lp_half_bruteforce(g: Graph, weights: Weights | None = None, limit: int = LP_BRUTE_LIMIT) -> Fraction:
    """Best feasible assignment in {0, 1/2, 1}^n, by enumerating all 3^n of them."""
    if g.n > limit:
        raise OracleLimitError(f"3^n enumeration limited to n <= {limit}, got n = {g.n}")
    w = as_weights(g.n, weights)
    ints, L = scale_to_int(w)
    X = _half_grid(g.n)
    ok = np.ones(len(X), dtype=bool)
    for u, v in g.edges():
        ok &= (X[:, u].astype(np.int16) + X[:, v]) <= 2
    feasible = X[ok]
    vec = _int_vector(ints, 2 * max(g.n, 1))
    vals = feasible.astype(vec.dtype) @ vec if g.n else np.zeros(1, dtype=np.int64)
    return Fraction(int(vals.max()), 2 * L)
