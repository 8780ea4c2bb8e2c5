from fractions import Fraction

import pytest

from pentachain.closed_form import gutman, kf_star, schultz, spanning_trees
from pentachain.graphs import ChainFamily, build_chain
from pentachain.oracles import (
    degree_kirchhoff_oracle,
    distance_matrix,
    effective_resistances,
    foster_check,
    gutman_oracle,
    kemeny_spectral,
    kf_star_spectral,
    kirchhoff_oracle,
    kirchhoff_spectral,
    schultz_oracle,
    spanning_trees_normalized_check,
    spanning_trees_oracle,
    wiener_oracle,
)

CYL = ChainFamily.CYLINDER
MOB = ChainFamily.MOBIUS


class TestDistances:
    def test_properties(self):
        g = build_chain(3, CYL)
        d = distance_matrix(g)
        size = g.vertex_count
        for i in range(size):
            assert d[i][i] == 0
            for j in range(size):
                assert d[i][j] == d[j][i]
                if g.has_edge(i, j):
                    assert d[i][j] == 1
        for i in range(size):
            for j in range(size):
                for k in range(size):
                    assert d[i][j] <= d[i][k] + d[k][j]

    def test_mobius_shrinks_diameter(self):
        for n in (3, 4, 5):
            dc = distance_matrix(build_chain(n, CYL))
            dm = distance_matrix(build_chain(n, MOB))
            assert max(map(max, dm)) <= max(map(max, dc))

    def test_wiener_frozen(self):
        assert wiener_oracle(build_chain(2, CYL)) == 86
        assert wiener_oracle(build_chain(2, MOB)) == 82
        assert wiener_oracle(build_chain(3, CYL)) == 249
        assert wiener_oracle(build_chain(3, MOB)) == 243


class TestResistances:
    def test_exact_symmetric_zero_diag(self):
        g = build_chain(2, CYL)
        r = effective_resistances(g, mode="exact")
        for i in range(10):
            assert r[i][i] == 0
            for j in range(10):
                assert r[i][j] == r[j][i]
                assert isinstance(r[i][j], Fraction)
                if i != j:
                    assert r[i][j] > 0

    def test_adjacent_resistance_below_one(self):
        g = build_chain(2, MOB)
        r = effective_resistances(g, mode="exact")
        for u, v in g.edges:
            assert 0 < r[u][v] < 1

    def test_float_matches_exact(self):
        g = build_chain(3, MOB)
        exact = effective_resistances(g, mode="exact")
        approx = effective_resistances(g, mode="float")
        for i in range(g.vertex_count):
            for j in range(g.vertex_count):
                assert abs(float(exact[i][j]) - approx[i][j]) < 1e-9

    def test_series_parallel_sanity(self):
        # triangle: every pair has resistance 2/3
        from pentachain.graphs import ChainGraph

        tri = ChainGraph(
            n=0,
            family=CYL,
            edges=((0, 1), (0, 2), (1, 2)),
            adjacency=((1, 2), (0, 2), (0, 1)),
        )
        r = effective_resistances(tri, mode="exact")
        assert r[0][1] == Fraction(2, 3)
        assert r[1][2] == Fraction(2, 3)


class TestKirchhoffAndFoster:
    def test_kirchhoff_frozen(self):
        assert kirchhoff_oracle(build_chain(2, CYL)) == Fraction(469, 12)
        assert kirchhoff_oracle(build_chain(2, MOB)) == Fraction(77, 2)
        assert kirchhoff_oracle(build_chain(3, CYL)) == Fraction(9479, 88)
        assert kirchhoff_oracle(build_chain(3, MOB)) == Fraction(1291, 12)

    @pytest.mark.parametrize("family", (CYL, MOB))
    def test_foster(self, family):
        for n in range(2, 6):
            g = build_chain(n, family)
            assert foster_check(g) == g.vertex_count - 1

    @pytest.mark.parametrize("family", (CYL, MOB))
    def test_kirchhoff_below_wiener(self, family):
        for n in range(2, 6):
            g = build_chain(n, family)
            assert kirchhoff_oracle(g) < wiener_oracle(g)

    @pytest.mark.parametrize("family", (CYL, MOB))
    def test_degree_kirchhoff_matches_closed_form(self, family):
        for n in (2, 3, 4):
            g = build_chain(n, family)
            assert degree_kirchhoff_oracle(g, mode="exact") == kf_star(n, family)


class TestCountingOracles:
    def test_gutman_schultz(self):
        for n in (2, 3, 4):
            for family in (CYL, MOB):
                g = build_chain(n, family)
                assert gutman_oracle(g) == gutman(n, family)
                assert schultz_oracle(g) == schultz(n, family)

    def test_spanning_trees_frozen(self):
        assert spanning_trees_oracle(build_chain(2, CYL)) == 768
        assert spanning_trees_oracle(build_chain(2, MOB)) == 800
        assert spanning_trees_oracle(build_chain(3, CYL)) == 23232
        assert spanning_trees_oracle(build_chain(3, MOB)) == 23328

    def test_spanning_trees_matches_closed_form(self):
        for n in (2, 3, 4, 5):
            for family in (CYL, MOB):
                g = build_chain(n, family)
                assert spanning_trees_oracle(g) == spanning_trees(n, family)


class TestSpectralOracles:
    @pytest.mark.parametrize("family", (CYL, MOB))
    def test_kf_star_spectral(self, family):
        for n in (2, 3, 5):
            g = build_chain(n, family)
            exact = kf_star(n, family)
            approx = kf_star_spectral(g)
            assert abs(approx - float(exact)) / float(exact) < 1e-8

    @pytest.mark.parametrize("family", (CYL, MOB))
    def test_kemeny_spectral(self, family):
        for n in (2, 4):
            g = build_chain(n, family)
            exact = float(kf_star(n, family)) / (14 * n)
            assert abs(kemeny_spectral(g) - exact) < 1e-8 * max(1.0, exact)

    def test_kirchhoff_spectral(self):
        for n in (2, 3):
            for family in (CYL, MOB):
                g = build_chain(n, family)
                exact = float(kirchhoff_oracle(g))
                assert abs(kirchhoff_spectral(g) - exact) / exact < 1e-8

    def test_spanning_trees_normalized(self):
        for n in range(2, 7):
            for family in (CYL, MOB):
                g = build_chain(n, family)
                approx = spanning_trees_normalized_check(g)
                exact = spanning_trees(n, family)
                assert round(approx) == exact
                assert abs(approx - exact) / exact < 1e-6
