"""Batched Monte-Carlo kernels over many permutations of one graph.

Each kernel exists twice: a numba loop (``*_nb``) and a vectorised numpy
version (``*_np``).  The public names dispatch on ``RVMIS_DISABLE_NUMBA``.
Both paths are deterministic functions of their inputs and agree exactly.

Inputs: the graph in CSR form (``indptr``, ``indices``, int64) and a
``(T, n)`` int64 array whose rows are permutations of ``0..n-1``.
"""
from __future__ import annotations

import numpy as np

from ._accel import USE_NUMBA, njit

_CHUNK_CELLS = 4_000_000


@njit(cache=True)
def prefix_layers_nb(indptr, indices, perms, cap):
    T, n = perms.shape
    out = np.empty((T, n), dtype=np.int64)
    pos = np.empty(n, dtype=np.int64)
    for t in range(T):
        for i in range(n):
            pos[perms[t, i]] = i
        for v in range(n):
            c = 0
            pv = pos[v]
            for e in range(indptr[v], indptr[v + 1]):
                if pos[indices[e]] < pv:
                    c += 1
                    if c >= cap:
                        break
            out[t, v] = c + 1
    return out


def _earlier_counts(indptr, indices, P, with_parent=False):
    t, n = P.shape
    src = np.repeat(np.arange(n, dtype=np.int64), np.diff(indptr))
    pos = np.empty_like(P)
    pos[np.arange(t)[:, None], P] = np.arange(n, dtype=np.int64)
    earlier = pos[:, indices] < pos[:, src]
    cs = np.zeros((t, len(indices) + 1), dtype=np.int64)
    np.cumsum(earlier, axis=1, out=cs[:, 1:])
    cnt = cs[:, indptr[1:]] - cs[:, indptr[:-1]]
    if not with_parent:
        return cnt, None
    np.cumsum(earlier * (indices + 1), axis=1, out=cs[:, 1:])
    psum = cs[:, indptr[1:]] - cs[:, indptr[:-1]]
    parent = np.where(cnt == 1, psum - 1, -1)
    return cnt, parent


def _chunks(T, m):
    step = max(1, _CHUNK_CELLS // max(1, m))
    for a in range(0, T, step):
        yield a, min(T, a + step)


def prefix_layers_np(indptr, indices, perms, cap):
    T, n = perms.shape
    out = np.empty((T, n), dtype=np.int64)
    for a, b in _chunks(T, len(indices)):
        cnt, _ = _earlier_counts(indptr, indices, perms[a:b])
        out[a:b] = np.minimum(cnt, cap) + 1
    return out


@njit(cache=True)
def g2_forest_weight_nb(indptr, indices, perms, weights):
    T, n = perms.shape
    out = np.zeros(T, dtype=np.int64)
    pos = np.empty(n, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    in2 = np.empty(n, dtype=np.bool_)
    incl = np.empty(n, dtype=np.int64)
    excl = np.empty(n, dtype=np.int64)
    for t in range(T):
        for i in range(n):
            pos[perms[t, i]] = i
        for v in range(n):
            c = 0
            p = -1
            pv = pos[v]
            for e in range(indptr[v], indptr[v + 1]):
                u = indices[e]
                if pos[u] < pv:
                    c += 1
                    p = u
                    if c >= 2:
                        break
            in2[v] = c <= 1
            parent[v] = p
            incl[v] = weights[v]
            excl[v] = 0
        total = 0
        # children follow their parent in the permutation, so a reverse sweep is bottom-up
        for i in range(n - 1, -1, -1):
            v = perms[t, i]
            if not in2[v]:
                continue
            best = incl[v] if incl[v] > excl[v] else excl[v]
            p = parent[v]
            if p >= 0 and in2[p]:
                incl[p] += excl[v]
                excl[p] += best
            else:
                total += best
        out[t] = total
    return out


def g2_forest_weight_np(indptr, indices, perms, weights):
    T, n = perms.shape
    weights = np.asarray(weights, dtype=np.int64)
    out = np.zeros(T, dtype=np.int64)
    for a, b in _chunks(T, len(indices) + n):
        P = perms[a:b]
        t = len(P)
        rows = np.arange(t)
        cnt, parent = _earlier_counts(indptr, indices, P, with_parent=True)
        in2 = cnt <= 1
        safe = np.maximum(parent, 0)
        has_parent = (parent >= 0) & in2[rows[:, None], safe]
        incl = np.where(in2, weights[None, :], 0)
        excl = np.zeros((t, n), dtype=np.int64)
        total = np.zeros(t, dtype=np.int64)
        for i in range(n - 1, -1, -1):
            v = P[:, i]
            active = in2[rows, v]
            iv, ev = incl[rows, v], excl[rows, v]
            best = np.maximum(iv, ev)
            push = active & has_parent[rows, v]
            total += np.where(active & ~push, best, 0)
            r, p = rows[push], parent[rows[push], v[push]]
            incl[r, p] += ev[push]
            excl[r, p] += best[push]
        out[a:b] = total
    return out


if USE_NUMBA:
    prefix_layers = prefix_layers_nb
    g2_forest_weight = g2_forest_weight_nb
else:
    prefix_layers = prefix_layers_np
    g2_forest_weight = g2_forest_weight_np

BACKEND = "numba" if USE_NUMBA else "numpy"
