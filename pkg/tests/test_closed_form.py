import json
from fractions import Fraction

import pytest

from pentachain.closed_form import (
    DEFAULT_TABLE_NS,
    TABLE_COLUMNS,
    cycle_cut2_det,
    cycle_cut2_matrix,
    cycle_cut_det,
    cycle_cut_matrix,
    cycle_marked2_det,
    cycle_marked2_matrix,
    cycle_marked_cut_det,
    cycle_marked_cut_matrix,
    cycle_marked_det,
    cycle_marked_matrix,
    decimal_string,
    gutman,
    gutman_kf_ratio,
    index_report,
    is_terminating,
    kemeny,
    kf_star,
    lemma_grid,
    path_det,
    path_marked2_det,
    path_marked2_matrix,
    path_marked_det,
    path_marked_matrix,
    path_matrix,
    ratio_diagnostics,
    render_table,
    schultz,
    skew_int_cofactor_sum,
    skew_int_det,
    skew_int_matrix,
    skew_recip_sum,
    spanning_trees,
    surd_pair,
    sym_recip_sum,
    table_number,
    table_rows,
)
from pentachain.graphs import ChainFamily
from pentachain.numerics import det_exact

CYL = ChainFamily.CYLINDER
MOB = ChainFamily.MOBIUS


class TestSurdPair:
    def test_frozen(self):
        assert surd_pair(0) == (1, 0)
        assert surd_pair(1) == (5, 2)
        assert surd_pair(2) == (49, 20)
        assert surd_pair(3) == (485, 198)
        assert surd_pair(4) == (4801, 1960)
        assert surd_pair(5) == (47525, 19402)
        assert surd_pair(8) == (46099201, 18819920)

    def test_pell_and_parity(self):
        for n in range(120):
            p, q = surd_pair(n)
            assert p * p - 6 * q * q == 1
            assert q % 2 == 0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            surd_pair(-1)


class TestDetFormulas:
    def test_path(self):
        assert path_matrix(3) == [[-2, 1, 0], [1, -2, 1], [0, 1, -2]]
        for order in range(1, 9):
            assert path_det(order) == det_exact(path_matrix(order))
        assert path_det(3) == -4

    def test_path_marked(self):
        assert path_marked_det(3, 1) == -7
        m = path_marked_matrix(3, 2)
        assert m[1][1] == -3
        for order in range(1, 8):
            for mark in range(1, order + 1):
                assert path_marked_det(order, mark) == det_exact(
                    path_marked_matrix(order, mark)
                )
        with pytest.raises(ValueError):
            path_marked_matrix(3, 4)

    def test_path_marked2(self):
        for p in range(2, 8):
            for s in range(1, p):
                for t in range(s + 1, p + 1):
                    assert path_marked2_det(p, s, t) == det_exact(
                        path_marked2_matrix(p, s, t)
                    )
        with pytest.raises(ValueError):
            path_marked2_matrix(4, 3, 3)

    def test_cycle_marked(self):
        m = cycle_marked_matrix(2, 1)
        assert m[0][3] == 1 and m[3][0] == 1
        assert m[1][1] == -3
        for n in range(2, 7):
            for i in range(1, n + 1):
                assert cycle_marked_det(n, i) == 2 * n
                assert det_exact(cycle_marked_matrix(n, i)) == 2 * n

    def test_cycle_cut(self):
        # deleting an interior position keeps the corner ones
        m = cycle_cut_matrix(3, 5)  # deletes position 2 of six
        assert len(m) == 5
        assert m[0][4] == 1
        # deleting an end position removes them
        m_end = cycle_cut_matrix(3, 4)  # deletes position 1
        assert m_end[0][4] == 0
        assert det_exact(m_end) == -6
        for n in range(2, 7):
            for i in range(n + 1, 3 * n + 1):
                assert cycle_cut_det(n, i) == -2 * n
                assert det_exact(cycle_cut_matrix(n, i)) == -2 * n
        assert cycle_cut_det(3, 9) == det_exact(cycle_cut_matrix(3, 9)) == -6

    def test_cycle_marked2(self):
        for n in range(2, 7):
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    assert cycle_marked2_det(n, i, j) == det_exact(
                        cycle_marked2_matrix(n, i, j)
                    )

    def test_cycle_cut2_hand_values(self):
        assert cycle_cut2_det(3, 5, 7) == 8
        assert det_exact(cycle_cut2_matrix(3, 5, 7)) == 8
        assert cycle_cut2_det(4, 7, 9) == 12
        assert det_exact(cycle_cut2_matrix(4, 7, 9)) == 12

    def test_cycle_marked_cut_hand_values(self):
        # the two branch cases around 2i versus the deleted position
        assert cycle_marked_cut_det(2, 1, 3) == -7
        assert det_exact(cycle_marked_cut_matrix(2, 1, 3)) == -7
        assert cycle_marked_cut_det(2, 1, 4) == -4
        assert det_exact(cycle_marked_cut_matrix(2, 1, 4)) == -4
        # deleting the marked position reduces to the plain cut case
        assert cycle_marked_cut_det(3, 2, 7) == cycle_cut_det(3, 7)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            cycle_marked_matrix(3, 4)
        with pytest.raises(ValueError):
            cycle_cut_matrix(3, 3)
        with pytest.raises(ValueError):
            cycle_cut2_matrix(3, 7, 5)
        with pytest.raises(ValueError):
            cycle_marked_cut_matrix(3, 1, 3)


class TestLemmaGrid:
    def test_all_cases_match(self):
        cases = lemma_grid()
        assert len(cases) > 500
        orders = set()
        names = set()
        for name, params, matrix, expected in cases:
            names.add(name)
            orders.add(len(matrix))
            assert det_exact(matrix) == expected, (name, params)
        assert max(orders) == 24
        assert names == {
            "path",
            "path_marked",
            "path_marked2",
            "cycle_marked",
            "cycle_marked2",
            "cycle_cut",
            "cycle_cut2",
            "cycle_marked_cut",
        }


class TestSkewInt:
    def test_matrix_frozen(self):
        assert skew_int_matrix(2, CYL) == [
            [4, -1, 0, -1],
            [-1, 3, -1, 0],
            [0, -1, 4, -1],
            [-1, 0, -1, 3],
        ]
        assert skew_int_matrix(2, MOB) == [
            [4, -1, 0, 1],
            [-1, 3, -1, 0],
            [0, -1, 4, -1],
            [1, 0, -1, 3],
        ]

    @pytest.mark.parametrize("family", (CYL, MOB))
    def test_det(self, family):
        for n in range(2, 9):
            p, _ = surd_pair(n)
            expected = 2 * p + 2 if family is MOB else 2 * p - 2
            assert skew_int_det(n, family) == expected
            assert det_exact(skew_int_matrix(n, family)) == expected

    def test_cofactor_sum(self):
        assert skew_int_cofactor_sum(2) == 140
        assert skew_int_cofactor_sum(3) == 2079
        for n in range(2, 7):
            m = skew_int_matrix(n, CYL)
            total = 0
            for drop in range(2 * n):
                keep = [r for r in range(2 * n) if r != drop]
                total += det_exact([[m[r][c] for c in keep] for r in keep])
            assert skew_int_cofactor_sum(n) == total


class TestIndexFormulas:
    def test_recip_sums(self):
        assert sym_recip_sum(2) == Fraction(87, 14)
        assert skew_recip_sum(2, CYL) == Fraction(35, 8)
        assert skew_recip_sum(2, MOB) == Fraction(21, 5)
        assert skew_recip_sum(3, CYL) == Fraction(12474, 4 * 484)

    def test_kf_star_frozen(self):
        assert kf_star(2, CYL) == Fraction(593, 2)
        assert kf_star(2, MOB) == Fraction(1458, 5)
        assert kf_star(3, MOB) == Fraction(1635, 2)
        assert kf_star(4, CYL) == Fraction(8621, 5)
        assert kf_star(4, MOB) == 1724

    def test_kemeny(self):
        assert kemeny(2, CYL) == Fraction(593, 56)
        for n in (2, 3, 5, 8):
            for family in (CYL, MOB):
                assert kemeny(n, family) == kf_star(n, family) / (14 * n)
                assert kemeny(n, family) == sym_recip_sum(n) + skew_recip_sum(n, family)

    def test_spanning_trees_frozen(self):
        assert spanning_trees(2, CYL) == 768
        assert spanning_trees(2, MOB) == 800
        assert spanning_trees(3, CYL) == 23232
        assert spanning_trees(3, MOB) == 23328

    def test_tau_gap(self):
        for n in range(2, 60):
            gap = spanning_trees(n, MOB) - spanning_trees(n, CYL)
            assert gap == 2 ** (n + 2) * n

    def test_gutman_schultz_frozen(self):
        assert gutman(2, CYL) == 658
        assert gutman(2, MOB) == 622
        assert gutman(3, CYL) == 1911
        assert gutman(3, MOB) == 1857
        assert schultz(2, CYL) == 476
        assert schultz(2, MOB) == 452
        assert schultz(3, CYL) == 1380
        assert schultz(3, MOB) == 1344
        assert schultz(4, CYL) == 3016
        assert schultz(4, MOB) == 2968

    def test_gutman_schultz_gap(self):
        for n in range(2, 51):
            assert gutman(n, CYL) - schultz(n, CYL) == 14 * n**3 + 16 * n**2 + 3 * n
            assert gutman(n, MOB) - schultz(n, MOB) == 14 * n**3 + 16 * n**2 - 3 * n

    def test_gutman_gap_between_families(self):
        for n in range(2, 40):
            gap = gutman(n, CYL) - gutman(n, MOB)
            assert gap == 18 * n

    def test_small_n_rejected(self):
        for fn in (kf_star, kemeny, spanning_trees, gutman, schultz):
            with pytest.raises(ValueError):
                fn(1, CYL)

    def test_ratio_diagnostics(self):
        rows = ratio_diagnostics((2, 3, 4), CYL)
        assert [r[2] for r in rows] == ["2.2192", "2.3344", "2.4243"]
        rows_m = ratio_diagnostics((2,), MOB)
        assert rows_m[0][2] == "2.1331"
        ratios = [gutman_kf_ratio(n, CYL) for n in range(2, 80)]
        assert all(a < b for a, b in zip(ratios, ratios[1:]))
        assert all(r < 3 for r in ratios)


class TestRendering:
    def test_decimal_string_round_half_even(self):
        assert decimal_string(Fraction(1, 2), 0) == "0"
        assert decimal_string(Fraction(3, 2), 0) == "2"
        assert decimal_string(Fraction(5, 2), 0) == "2"
        assert decimal_string(Fraction(25, 1000), 2) == "0.02"
        assert decimal_string(Fraction(35, 1000), 2) == "0.04"
        assert decimal_string(Fraction(-1, 3), 4) == "-0.3333"
        assert decimal_string(Fraction(2, 3), 4) == "0.6667"

    def test_decimal_string_keeps_trailing_zeros(self):
        assert decimal_string(Fraction(31101720, 10000) + 0, 4) == "3110.1720"
        assert decimal_string(Fraction(1), 3) == "1.000"

    def test_terminating(self):
        assert is_terminating(Fraction(593, 2))
        assert is_terminating(Fraction(7, 40))
        assert not is_terminating(Fraction(1, 3))
        assert not is_terminating(Fraction(9479, 88))

    def test_table_number(self):
        assert table_number(kf_star(2, CYL)) == "296.5"
        assert table_number(kf_star(2, MOB)) == "291.6"
        assert table_number(kf_star(4, CYL)) == "1724.2"
        assert table_number(kf_star(4, MOB)) == "1724"
        assert table_number(kf_star(8, CYL)) == "11128.4"
        assert table_number(kf_star(3, CYL)) == "818.6136"
        assert table_number(Fraction(5)) == "5"

    def test_invalid_places(self):
        with pytest.raises(ValueError):
            decimal_string(Fraction(1), -1)


class TestTable:
    def test_rows(self):
        rows = table_rows((2, 3))
        assert len(rows) == 2
        assert rows[0]["n"] == "2"
        assert rows[0]["gut_cylinder"] == "658"
        assert rows[0]["kf_star_cylinder"] == "296.5"
        assert rows[0]["ratio_cylinder"] == "2.2192"
        assert rows[1]["kf_star_mobius"] == "817.5"

    def test_default_ns(self):
        assert DEFAULT_TABLE_NS == (2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 50, 99)

    def test_csv(self):
        text = render_table((2,), "csv")
        lines = text.splitlines()
        assert lines[0] == ",".join(TABLE_COLUMNS)
        assert lines[1] == "2,658,296.5,2.2192,622,291.6,2.1331"
        assert text.endswith("\n")

    def test_json(self):
        rows = json.loads(render_table((2, 4), "json"))
        assert len(rows) == 2
        assert rows[1]["kf_star_mobius"] == "1724"

    def test_deterministic(self):
        assert render_table() == render_table()

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            render_table((2,), "tsv")


class TestIndexReport:
    def test_fields(self):
        rep = index_report(3, MOB)
        assert rep.tau == 23328
        assert rep.gutman == 1857
        assert rep.kf_star == Fraction(1635, 2)
        d = rep.to_dict()
        assert d["family"] == "mobius"
        assert d["kf_star"] == {"num": 1635, "den": 2, "decimal": "817.5"}
        assert d["tau"] == 23328
        assert d["ratio"] == "2.2716"

    def test_precision_override(self):
        d = index_report(2, CYL).to_dict(precision=2)
        assert d["kf_star"]["decimal"] == "296.50"
        assert d["ratio"] == "2.22"

    def test_kemeny_field(self):
        d = index_report(2, CYL).to_dict()
        assert d["kemeny"]["num"] == 593
        assert d["kemeny"]["den"] == 56
