import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from helpers import graphs, no_perfect_matching_cubic
from stardecomp.errors import ScaleExceeded
from stardecomp.graph import complete_graph, cycle_graph, petersen_graph
from stardecomp.matching import (
    AuxBipartite,
    hall_violator,
    hopcroft_karp,
    is_matching,
    max_matching_general,
)


def random_bipartite(rng: random.Random, max_side: int = 12) -> AuxBipartite:
    n_left, n_right = rng.randint(0, max_side), rng.randint(0, max_side)
    p = rng.random()
    rows = [[j for j in range(n_right) if rng.random() < p] for _ in range(n_left)]
    return AuxBipartite.from_rows(rows, n_right)


@st.composite
def bipartites(draw, max_side: int = 8):
    n_left = draw(st.integers(0, max_side))
    n_right = draw(st.integers(0, max_side))
    rows = [draw(st.sets(st.integers(0, n_right - 1))) if n_right else set() for _ in range(n_left)]
    return AuxBipartite.from_rows(rows, n_right)


class TestHopcroftKarp:
    def test_perfect_matching_input(self):
        h = AuxBipartite.from_rows([[i] for i in range(5)], 5)
        assert hopcroft_karp(h) == [(i, i) for i in range(5)]

    def test_isolated_left_vertex(self):
        h = AuxBipartite.from_rows([[0], [], [1]], 2)
        assert len(hopcroft_karp(h)) < 3

    @settings(max_examples=150, deadline=None)
    @given(bipartites())
    def test_maximum(self, h):
        m = hopcroft_karp(h)
        lefts = [u for u, _ in m]
        rights = [j for _, j in m]
        assert len(set(lefts)) == len(lefts) and len(set(rights)) == len(rights)
        assert all(j in h.adjacency[u] for u, j in m)
        assert len(m) == oracles.bipartite_max_matching(h.adjacency, len(h.right))


class TestHallViolator:
    def test_isolated(self):
        h = AuxBipartite(("a",), ("x",), ((),))
        assert hall_violator(h) == ("a",)

    def test_perfect(self):
        assert hall_violator(AuxBipartite.from_rows([[0], [1], [2]], 3)) is None

    def test_smallest_then_lexicographic(self):
        # {1,2} and {2,3} both squeeze into one right vertex; nothing of size 1 does
        h = AuxBipartite.from_rows([[0, 1, 2], [3], [3], [3]], 4)
        assert hall_violator(h) == (1, 2)

    def test_empty_left(self):
        assert hall_violator(AuxBipartite.from_rows([], 3)) is None

    def test_scale_guard(self):
        with pytest.raises(ScaleExceeded):
            hall_violator(AuxBipartite.from_rows([[0]] * 25, 1))

    def test_wide_right_side(self):
        rows = [[j for j in range(70) if j % 3 == i % 3] for i in range(5)]
        assert hall_violator(AuxBipartite.from_rows(rows, 70)) is None
        rows = [[69]] * 3
        assert hall_violator(AuxBipartite.from_rows(rows, 70)) == (0, 1)

    def test_differential_8_by_8(self):
        rng = random.Random(8)
        for _ in range(200):
            rows = [[j for j in range(8) if rng.random() < 0.25] for _ in range(8)]
            h = AuxBipartite.from_rows(rows, 8)
            violator = hall_violator(h)
            assert (violator is None) == (len(hopcroft_karp(h)) == 8)
            assert (violator is not None) == oracles.hall_violation_exists(h.adjacency)
            if violator is not None:
                nbhd = set().union(*(h.adjacency[x] for x in violator))
                assert len(nbhd) < len(violator)

    @settings(max_examples=100, deadline=None)
    @given(bipartites(max_side=7))
    def test_violator_matches_brute_force(self, h):
        v = hall_violator(h)
        assert (v is not None) == oracles.hall_violation_exists(h.adjacency)
        assert (v is None) == (len(hopcroft_karp(h)) == len(h.left))


class TestGeneralMatching:
    def test_examples(self, k4):
        assert len(max_matching_general(k4)) == 2
        assert len(max_matching_general(cycle_graph(5))) == 2
        m = max_matching_general(petersen_graph())
        assert len(m) == 5 and is_matching(m)
        assert sorted(x for e in m for x in e) == list(range(10))

    def test_no_perfect_matching(self):
        g = no_perfect_matching_cubic()
        assert oracles.max_matching_size(g) == 7
        assert len(max_matching_general(g)) == 7

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=12))
    def test_matches_brute_force(self, g):
        m = max_matching_general(g)
        assert is_matching(m)
        assert all(g.has_edge(u, v) for u, v in m)
        assert len(m) == oracles.max_matching_size(g)

    def test_odd_cycles_force_blossoms(self):
        # two triangles joined by a path: needs blossom contraction to be exact
        from stardecomp.graph import Graph

        g = Graph.from_edges(8, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5)])
        assert len(max_matching_general(g)) == oracles.max_matching_size(g) == 4
        assert len(max_matching_general(complete_graph(7))) == 3
