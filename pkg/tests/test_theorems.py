from itertools import combinations

import pytest

from helpers import no_perfect_matching_cubic
from stardecomp.catalog import load_catalog
from stardecomp.certificate import verify_certificate
from stardecomp.decompose import (
    brute_force_decompose,
    build_aux,
    decide_s1r,
    decompose_with_centers,
)
from stardecomp.errors import BadCenterSet, BadOrder, NotBipartite, NotCubic, NotRegular
from stardecomp.graph import (
    bipartition,
    complete_bipartite,
    cycle_graph,
    disjoint_union,
    parse_graph6,
    random_cubic,
    random_regular,
)
from stardecomp.invariants import enumerate_independent_sets, independence_number
from stardecomp.matching import hall_violator
from stardecomp.theorems import (
    bipartite_domination_check,
    bipartite_matching_condition,
    is_independent_cycling_set,
    s11_decompose,
    theorem_cycling_applies,
    theorem_main_applies,
    theorem_r_cycling_applies,
)

# 4-regular, order 20, connected; the centers 8..15 form an independent
# cycling set off all triangles, yet center 8 only sees isolated vertices
R4_COUNTEREXAMPLE = "Sl?GGS?T?GSGQ_COP?@C??G[?iO@q?@X?"


def _applicable_pairs(g, checker):
    alpha = independence_number(g).size
    for s in enumerate_independent_sets(g, 3 * g.n // 8):
        if checker(g, s, alpha):
            yield s


class TestCubicCheckers:
    def test_q3_has_too_large_alpha(self, q3):
        assert not theorem_cycling_applies(q3, (0, 3, 5))
        assert not theorem_main_applies(q3, (0, 3, 5))

    def test_order_not_divisible(self, petersen):
        assert not theorem_cycling_applies(petersen, (0, 1, 2))

    def test_requires_cubic(self, c8):
        with pytest.raises(NotCubic):
            theorem_cycling_applies(c8, [0])
        with pytest.raises(NotCubic):
            theorem_main_applies(c8, [0])

    def test_cycling_set_definition(self, q3):
        assert is_independent_cycling_set(cycle_graph(6), [0, 3]) is False
        assert is_independent_cycling_set(q3, (0, 3, 5, 6))
        assert not is_independent_cycling_set(q3, (0, 1))

    def test_catalog_hit_is_decomposable(self):
        hits = [
            (g, s)
            for g in load_catalog("cubic_connected_8")
            for s in _applicable_pairs(g, theorem_cycling_applies)
        ]
        assert hits
        for g, s in hits:
            cert = decompose_with_centers(g, s)
            assert cert is not None and verify_certificate(g, cert, 3)

    def test_random_sweep(self):
        for seed in range(60):
            g = random_cubic(16, seed)
            for checker in (theorem_cycling_applies, theorem_main_applies):
                for s in _applicable_pairs(g, checker):
                    assert decompose_with_centers(g, s) is not None


class TestRCycling:
    def test_bad_inputs(self, q3):
        with pytest.raises(ValueError):
            theorem_r_cycling_applies(q3, [0], 3)
        with pytest.raises(NotRegular):
            theorem_r_cycling_applies(q3, [0], 4)

    def test_counterexample(self):
        g = parse_graph6(R4_COUNTEREXAMPLE)
        s = tuple(range(8, 16))
        assert g.n == 20 and g.m == 40
        assert theorem_r_cycling_applies(g, s, 4)
        assert decompose_with_centers(g, s, 4) is None
        assert hall_violator(build_aux(g, s, admissible=True)) == (8,)
        # another center set still works
        cert = decide_s1r(g, 4)
        assert cert is not None and verify_certificate(g, cert, 4)

    def test_random_order_10(self):
        for seed in range(200):
            g = random_regular(10, 4, seed)
            for s in enumerate_independent_sets(g, 4):
                if theorem_r_cycling_applies(g, s, 4):
                    assert decompose_with_centers(g, s, 4) is not None
                    assert brute_force_decompose(g, 4, centers=s) is not None


class TestBipartiteMatchingCondition:
    @pytest.mark.parametrize("name", ["bipartite_cubic_8", "bipartite_cubic_16"])
    def test_biconditional(self, name):
        for g in load_catalog(name):
            for part in bipartition(g):
                for s in combinations(part, 3 * g.n // 8):
                    result = bipartite_matching_condition(g, part, s)
                    assert result.decomposable == (decompose_with_centers(g, s) is not None)
                    if result.decomposable:
                        assert result.certificate.center_set == tuple(sorted(s))
                        assert verify_certificate(g, result.certificate, 3)

    def test_against_oracle_q3(self, q3):
        part = bipartition(q3)[0]
        for s in combinations(part, 3):
            result = bipartite_matching_condition(q3, part, s)
            assert result.decomposable == (brute_force_decompose(q3, 3, centers=s) is not None)

    def test_errors(self, q3, k4):
        a, b = bipartition(q3)
        with pytest.raises(NotBipartite):
            bipartite_matching_condition(q3, (0, 1, 2, 3), a[:3])
        with pytest.raises(BadCenterSet):
            bipartite_matching_condition(q3, a, b[:3])
        with pytest.raises(BadCenterSet):
            bipartite_matching_condition(q3, a, a[:2])
        with pytest.raises(NotBipartite):
            bipartite_matching_condition(k4, (0, 1), (0,))


class TestDomination:
    def test_q3(self, q3):
        check = bipartite_domination_check(q3)
        assert check.gamma == 2 and check.gamma_is_n_over_4
        assert check.dominating_split == (1, 1)
        first, second = check.both_decompositions
        assert verify_certificate(q3, first, 3) and verify_certificate(q3, second, 3)
        assert check.consistent

    def test_catalog_16(self):
        perfect = 0
        for g in load_catalog("bipartite_cubic_16"):
            check = bipartite_domination_check(g)
            assert check.consistent
            if check.gamma_is_n_over_4:
                perfect += 1
                assert check.dominating_split == (2, 2)
        assert perfect > 0

    def test_errors(self, k4, c8):
        with pytest.raises(NotBipartite):
            bipartite_domination_check(disjoint_union(k4, k4))
        with pytest.raises(NotCubic):
            bipartite_domination_check(c8)
        with pytest.raises(BadOrder):
            bipartite_domination_check(complete_bipartite(3, 3))


class TestS11:
    @pytest.mark.parametrize("name", ["cubic_connected_4", "cubic_connected_6", "cubic_connected_8",
                                      "cubic_connected_10", "cubic_connected_12"])
    def test_catalogs(self, name):
        for g in load_catalog(name):
            cert = s11_decompose(g)
            assert cert is not None and verify_certificate(g, cert, 2)

    def test_without_perfect_matching(self):
        g = no_perfect_matching_cubic()
        assert s11_decompose(g) is None
        assert brute_force_decompose(g, 2) is None

    def test_petersen(self, petersen):
        cert = s11_decompose(petersen)
        assert len(cert.stars) == 5 and verify_certificate(petersen, cert, 2)

    def test_requires_cubic(self, c8):
        with pytest.raises(NotCubic):
            s11_decompose(c8)
