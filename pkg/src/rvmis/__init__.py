"""Approximation algorithms for maximum independent set, measured by recoverable value."""
from .avg2 import solve_avg2
from .classic import greedy, lp_plus_greedy, random_permutation_is, weighted_greedy
from .exact import alpha, mwis_exact, mwis_value
from .graph import Graph, build_graph, recoverable_value
from .halfint import nt_solve, rv_lp_round
from .kcolored import Coloring, best_pair_approx, lp_largest_class_approx
from .layered import fast_randomized_mwis, plg
from .reductions import reduce_low_degree

__version__ = "0.1.0"

__all__ = [
    "Graph", "build_graph", "recoverable_value",
    "alpha", "mwis_exact", "mwis_value",
    "greedy", "weighted_greedy", "random_permutation_is", "lp_plus_greedy",
    "nt_solve", "rv_lp_round", "reduce_low_degree",
    "fast_randomized_mwis", "plg", "solve_avg2",
    "Coloring", "best_pair_approx", "lp_largest_class_approx",
]
