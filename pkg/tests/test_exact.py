from fractions import Fraction

import pytest

from corpus import atlas, random_graphs, rational_weights
from rvmis.errors import OracleLimitError
from rvmis.exact import (
    alpha,
    lp_half_bruteforce,
    max_recoverable_value,
    mwis_enumerate,
    mwis_exact,
    mwis_value,
    rv_maximizer,
)
from rvmis.generators import complete, complete_bipartite, cycle, petersen
from rvmis.graph import build_graph, rv_weights, weight_of


def test_petersen_alpha_by_enumeration():
    # frozen from enumeration over all 2^10 subsets
    assert mwis_enumerate(petersen())[0] == 4
    assert alpha(petersen()) == 4


@pytest.mark.parametrize("g,value", [(cycle(5), Fraction(5, 2)), (complete(3), Fraction(3, 2))])
def test_lp_bruteforce_small(g, value):
    assert lp_half_bruteforce(g) == value


def test_branch_and_bound_agrees_with_enumeration():
    for i, g in enumerate(random_graphs(120, max_n=12)):
        w = rational_weights(g.n, i)
        value, best = mwis_enumerate(g, w)
        assert mwis_value(g, w) == value
        got = mwis_exact(g, w)
        assert got == best  # lexicographically smallest optimum
        assert weight_of(got, w) == value


def test_atlas_alpha_matches_enumeration():
    for g in atlas(6):
        assert alpha(g) == mwis_enumerate(g)[0]


def test_oracle_limits():
    with pytest.raises(OracleLimitError):
        mwis_enumerate(build_graph(30, []))
    with pytest.raises(OracleLimitError):
        lp_half_bruteforce(build_graph(13, []))


def test_rv_maximizer_uses_capped_weights():
    g = complete_bipartite(3, 7)
    best = rv_maximizer(g, 2)
    assert best == frozenset(range(3, 10))
    assert max_recoverable_value(g, 2) == 7 * Fraction(2, 4)
    assert weight_of(best, rv_weights(g, 2)) == max_recoverable_value(g, 2)


def test_empty_graph():
    g = build_graph(0, [])
    assert mwis_exact(g) == frozenset()
    assert alpha(g) == 0
