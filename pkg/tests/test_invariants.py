import random

import pytest
from hypothesis import given, settings

import oracles
from helpers import graphs, random_graph
from stardecomp.catalog import load_catalog
from stardecomp.errors import ScaleExceeded
from stardecomp.graph import (
    complete_graph,
    cycle_graph,
    empty_graph,
    hypercube,
    path_graph,
    random_cubic,
)
from stardecomp.invariants import (
    domination_number,
    enumerate_independent_sets,
    independence_number,
    is_dominating,
)


def test_independence_examples(k4, c8, q3):
    assert independence_number(k4).size == 1
    assert independence_number(c8).size == 4
    assert oracles.alpha(q3) == 4
    w = independence_number(q3)
    assert w.size == 4 and q3.is_independent(w.set)


def test_witness_is_deterministic():
    g = random_cubic(24, 3)
    assert independence_number(g) == independence_number(g)
    assert domination_number(g) == domination_number(g)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10))
def test_alpha_matches_brute_force(g):
    w = independence_number(g)
    assert w.size == len(w.set) == oracles.alpha(g)
    assert g.is_independent(w.set)


def test_alpha_random_corpus():
    rng = random.Random(2)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 12), rng.uniform(0.1, 0.7))
        assert independence_number(g).size == oracles.alpha(g)


class TestEnumeration:
    def test_examples(self, k4):
        assert list(enumerate_independent_sets(k4, 1)) == [(0,), (1,), (2,), (3,)]
        assert list(enumerate_independent_sets(k4, 2)) == []
        c5 = cycle_graph(5)
        assert len(oracles.independent_sets(c5, 2)) == 5
        assert len(list(enumerate_independent_sets(c5, 2))) == 5

    def test_zero(self, k4):
        assert list(enumerate_independent_sets(k4, 0)) == [()]

    def test_bad_k(self, k4):
        with pytest.raises(ValueError):
            list(enumerate_independent_sets(k4, 5))

    def test_early_termination(self):
        sets = enumerate_independent_sets(empty_graph(30), 3)
        assert next(sets) == (0, 1, 2)
        assert next(sets) == (0, 1, 3)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=9))
    def test_matches_brute_force(self, g):
        for k in range(g.n + 1):
            assert list(enumerate_independent_sets(g, k)) == oracles.independent_sets(g, k)

    @pytest.mark.parametrize("name", ["cubic_connected_8", "cubic_connected_10"])
    def test_maximum_sets_exist(self, name):
        for g in load_catalog(name):
            a = independence_number(g).size
            found = list(enumerate_independent_sets(g, a))
            assert found and all(g.is_independent(s) for s in found)
            assert not list(enumerate_independent_sets(g, a + 1))


def test_domination_examples(k4, c8, q3):
    # the Q3 value is the one quoted for the hypercube
    assert domination_number(q3).size == 2
    assert domination_number(k4).size == 1
    assert domination_number(c8).size == 3
    assert domination_number(path_graph(1)).size == 1


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10))
def test_gamma_matches_brute_force(g):
    w = domination_number(g)
    assert w.size == len(w.set) == oracles.gamma(g)
    assert is_dominating(g, w.set)


def test_cubic_domination_lower_bound():
    # each vertex dominates at most four
    for name in ("cubic_connected_8", "cubic_connected_10", "cubic_connected_12"):
        for g in load_catalog(name):
            assert 4 * domination_number(g).size >= g.n
    for seed in range(20):
        g = random_cubic(32, seed)
        assert 4 * domination_number(g).size >= g.n


def test_scale_guard():
    g = empty_graph(65)
    with pytest.raises(ScaleExceeded):
        independence_number(g)
    with pytest.raises(ScaleExceeded):
        domination_number(g)
    with pytest.raises(ScaleExceeded):
        next(enumerate_independent_sets(g, 1))


def test_n64_cubic_completes():
    g = random_cubic(64, 0)
    a = independence_number(g)
    assert g.is_independent(a.set) and 4 * a.size <= 64 * 2
