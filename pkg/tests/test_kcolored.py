from fractions import Fraction
from math import ceil

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import graphs
from rvmis.exact import alpha
from rvmis.generators import complete, complete_bipartite, cycle, gen_hardness_product, gen_kcolored, path
from rvmis.graph import build_graph
from rvmis.kcolored import (
    Coloring,
    ImproperColoringError,
    best_pair_approx,
    bipartite_mis_exact,
    color_from_permutation,
    lp_largest_class_approx,
)
from rvmis.layered import layer_decompose


@pytest.mark.parametrize(
    "g,sides,size",
    [
        (complete_bipartite(3, 7), [0] * 3 + [1] * 7, 7),
        (path(4), [0, 1, 0, 1], 2),
        (cycle(6), [0, 1] * 3, 3),
    ],
)
def test_bipartite_mis_small(g, sides, size):
    s = bipartite_mis_exact(g, sides)
    g.check_independent(s)
    assert len(s) == size


def test_bipartite_rejects_improper_sides():
    with pytest.raises(ImproperColoringError) as exc:
        bipartite_mis_exact(path(3), [0, 0, 1])
    assert exc.value.edge == (0, 1)


def test_konig_against_oracle():
    rng = np.random.default_rng(5)
    for _ in range(200):
        a, b = (int(x) for x in rng.integers(0, 8, 2))
        g = build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b) if rng.random() < 0.4])
        s = bipartite_mis_exact(g, [0] * a + [1] * b)
        g.check_independent(s)
        assert len(s) == alpha(g)


def test_first_fit_coloring():
    p, c = color_from_permutation(layer_decompose(cycle(5), 0), 1)
    assert set(c.color) <= {0}
    p, c = color_from_permutation(layer_decompose(cycle(5), 0), 2)
    assert len(set(c.color)) <= 2


@given(graphs(max_n=12), st.integers(0, 1000), st.integers(1, 5))
@settings(max_examples=100, deadline=None)
def test_first_fit_is_proper(g, seed, k):
    p, c = color_from_permutation(layer_decompose(g, seed), k)
    c.check(p.graph)
    assert len(c.color) == p.graph.n


def test_hardness_product_examples():
    g, c = gen_hardness_product(complete(2), 3)
    assert len(best_pair_approx(g, c)) >= 2
    g, c = gen_hardness_product(cycle(5), 3)
    assert len(best_pair_approx(g, c)) >= 5
    assert len(lp_largest_class_approx(g, c)) >= 5


def test_c5_three_colouring():
    c = Coloring(3, (0, 1, 0, 1, 2))
    assert len(lp_largest_class_approx(cycle(5), c)) >= 2
    assert len(best_pair_approx(cycle(5), c)) == 2


def test_edgeless_and_two_coloured():
    g = build_graph(4, [])
    assert lp_largest_class_approx(g, Coloring(1, (0,) * 4)) == frozenset(range(4))
    g = cycle(8)
    assert len(best_pair_approx(g, Coloring(2, (0, 1) * 4))) == 4


def test_improper_coloring_rejected():
    with pytest.raises(ImproperColoringError):
        best_pair_approx(path(2), Coloring(2, (1, 1)))
    with pytest.raises(ValueError):
        Coloring(2, (0, 2))


@given(st.integers(2, 12), st.integers(3, 5), st.floats(0.1, 0.9), st.integers(0, 10**6))
@settings(max_examples=80, deadline=None)
def test_two_over_k_bound(n, k, p, seed):
    g, c = gen_kcolored(n, k, p, seed)
    need = ceil(Fraction(2, k) * alpha(g))
    for fn in (best_pair_approx, lp_largest_class_approx):
        s = fn(g, c)
        g.check_independent(s)
        assert len(s) >= need
