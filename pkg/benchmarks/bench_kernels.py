"""Time the numba kernels against the numpy fallback on identical inputs.

    python benchmarks/bench_kernels.py --trials 20000 --repeat 3

Both paths are checked for equal outputs before timing.  With
``RVMIS_DISABLE_NUMBA=1`` the ``*_nb`` functions run as plain Python, so the
comparison is only meaningful with numba enabled.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from rvmis import kernels
from rvmis.generators import gen_layered_counterexample, gen_random


def _best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _cases():
    yield "layered(6,6)", gen_layered_counterexample(6, 6)
    yield "regular(n=200,d=3)", gen_random("regular", 1, n=200, d=3)
    yield "gnp(n=100,p=0.1)", gen_random("gnp", 2, n=100, p=0.1)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=20_000)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    print(f"backend in use: {kernels.BACKEND}")
    print(f"{'graph':<22}{'kernel':<18}{'numba s':>10}{'numpy s':>10}{'speedup':>9}")
    for name, g in _cases():
        indptr, indices = g.csr
        rng = np.random.default_rng(args.seed)
        perms = np.stack([rng.permutation(g.n) for _ in range(args.trials)]).astype(np.int64)
        weights = np.ones(g.n, dtype=np.int64)
        pairs = [
            ("prefix_layers", kernels.prefix_layers_nb, kernels.prefix_layers_np, (indptr, indices, perms, 3)),
            ("g2_forest_weight", kernels.g2_forest_weight_nb, kernels.g2_forest_weight_np, (indptr, indices, perms, weights)),
        ]
        for kname, nb, npf, call_args in pairs:
            a, b = nb(*call_args), npf(*call_args)  # also warms the jit cache
            if not np.array_equal(a, b):
                raise SystemExit(f"{name} {kname}: backends disagree")
            t_nb = _best_of(lambda: nb(*call_args), args.repeat)
            t_np = _best_of(lambda: npf(*call_args), args.repeat)
            print(f"{name:<22}{kname:<18}{t_nb:>10.4f}{t_np:>10.4f}{t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
