import pytest
from hypothesis import given, settings, strategies as st

from addcolor.graph import Graph, verify_additive_coloring
from addcolor.families import generate, parse_spec
from addcolor.solver import (
    BUDGET_EXCEEDED,
    OPTIMAL,
    UB_EXCEEDED,
    ResourceLimitError,
    chromatic_exact,
    dsatur,
    eta_exact,
    greedy_clique_lower_bound,
    verify_proper_coloring,
)

from oracles import chi_naive, eta_naive


def g_of(text):
    return generate(parse_spec(text))


class TestEtaExact:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("cycle:5", 3),
            ("cycle:6", 2),
            ("complete:4", 4),
            ("thick-spider:4", 3),
            ("path:2", 2),
            ("path:3", 1),
        ],
    )
    def test_known_values(self, text, expected):
        result = eta_exact(g_of(text))
        assert result.status == OPTIMAL and result.value == expected

    def test_petersen_regression(self, petersen):
        # pinned after the first verified run (naive enumeration agrees)
        assert eta_exact(petersen).value == 2

    def test_certificate_verifies(self):
        g = g_of("wheel:7")
        result = eta_exact(g)
        assert verify_additive_coloring(g, result.certificate)
        assert result.certificate.k <= result.value

    def test_minimality_via_ub(self):
        g = g_of("cycle:5")
        assert eta_exact(g, lb=1, ub=2).status == UB_EXCEEDED

    def test_budget_exceeded(self):
        g = g_of("complete-sun:6")
        result = eta_exact(g, node_budget=10)
        assert result.status == BUDGET_EXCEEDED
        assert result.value is None

    def test_bad_bounds_rejected(self):
        with pytest.raises(ValueError):
            eta_exact(g_of("cycle:5"), lb=3, ub=2)

    def test_edgeless(self):
        result = eta_exact(Graph.from_edges(3, []))
        assert result.value == 1

    def test_monotone_feasibility(self):
        # feasible at k stays feasible at k+1
        for text in ("cycle:5", "complete:4", "thin-spider:3"):
            g = g_of(text)
            eta = eta_exact(g).value
            for k in (eta, eta + 1, eta + 2):
                assert eta_exact(g, lb=k, ub=k).certificate is not None

    def test_matches_oracle_small(self, conn_small):
        for g in conn_small:
            if g.n > 5:
                break
            assert eta_exact(g).value == eta_naive(g)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10**9))
    def test_matches_oracle_random_n6(self, seed):
        import random

        rng = random.Random(seed)
        edges = [(i, j) for i in range(6) for j in range(i + 1, 6) if rng.random() < 0.5]
        g = Graph.from_edges(6, edges)
        assert eta_exact(g).value == eta_naive(g)

    def test_twin_breaking_safe(self, conn_small):
        # identical values with symmetry breaking on and off
        for g in conn_small:
            if g.n > 6:
                break
            on = eta_exact(g, twin_breaking=True).value
            off = eta_exact(g, twin_breaking=False).value
            assert on == off

    def test_matches_oracle_all_n6(self, conn_small):
        for g in conn_small:
            if g.n == 6:
                assert eta_exact(g).value == eta_naive(g)


class TestDsatur:
    def test_complete(self):
        count, colors = dsatur(g_of("complete:5"))
        assert count == 5

    def test_even_cycle(self):
        assert dsatur(g_of("cycle:6"))[0] == 2

    def test_odd_cycle(self):
        assert dsatur(g_of("cycle:5"))[0] == 3

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 10**9))
    def test_always_proper(self, seed):
        import random

        rng = random.Random(seed)
        n = rng.randint(1, 9)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
        g = Graph.from_edges(n, edges)
        count, colors = dsatur(g)
        assert verify_proper_coloring(g, colors)
        assert count == max(colors)


class TestChromatic:
    def test_petersen(self, petersen):
        assert chromatic_exact(petersen).value == 3

    def test_k33(self):
        assert chromatic_exact(g_of("multipartite:3,3")).value == 2

    def test_odd_wheel(self):
        assert chromatic_exact(g_of("wheel:5")).value == 4

    def test_limit(self):
        with pytest.raises(ResourceLimitError):
            chromatic_exact(Graph.from_edges(17, []), limit=16)

    def test_certificate(self):
        g = g_of("wheel:6")
        result = chromatic_exact(g)
        assert verify_proper_coloring(g, result.certificate)
        assert max(result.certificate) == result.value

    def test_matches_oracle_small(self, conn_small):
        for g in conn_small:
            if g.n > 5:
                break
            assert chromatic_exact(g).value == chi_naive(g)

    def test_clique_bound_valid(self, conn_small):
        for g in conn_small:
            if g.n > 6:
                break
            assert greedy_clique_lower_bound(g) <= chromatic_exact(g).value
