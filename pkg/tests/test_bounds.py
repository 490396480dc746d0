"""Bound catalog, Harder-Narasimhan arithmetic, and table emitters."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fibrato.bounds import (
    BadIndexSequence,
    HNProfile,
    PreconditionViolated,
    arakelov_speed,
    bound,
    castelnuovo_holds,
    decimal3,
    double_cover_slope,
    few_fibers_speed,
    hn_castelnuovo_slope,
    hn_chi,
    hodge_partial_sum_check,
    hodge_partial_sums,
    kodaira_speed,
    low_base_speed,
    low_base_speed_at,
    luzuo_slope,
    minimal_m,
    nonhyp_slope,
    nonhyp_speed,
    optimal_base_change,
    render_csv,
    render_markdown,
    slope_lower,
    slope_upper,
    table,
    teich_hyp_one_zero,
    teich_hyp_two_zeros,
    teich_max,
    xiao_lower_bound,
)


# ---------------------------------------------------------------------------
# the catalog

def test_slope_bounds():
    assert slope_lower(2) == 2
    assert slope_lower(3) == Fraction(8, 3)
    assert slope_upper() == 12
    for g in range(2, 51):
        assert slope_lower(g) < slope_upper()


def test_nonhyp_slope_clauses():
    assert nonhyp_slope(3) == 3
    assert nonhyp_slope(4) == Fraction(24, 7)
    assert nonhyp_slope(5) == 4
    assert nonhyp_slope(6) == Fraction(45, 13)
    assert nonhyp_slope(12) == Fraction(99, 25)
    assert nonhyp_slope(13) == 4
    assert nonhyp_slope(40) == 4
    for g in range(3, 51):
        assert nonhyp_slope(g) > slope_lower(g)


def test_clause_consistency_at_six():
    # at g = 6 the hyperelliptic Lu-Zuo constant collapses onto the slope
    # inequality while the Castelnuovo route stays strictly better
    assert luzuo_slope(6) == slope_lower(6) == Fraction(10, 3)
    assert hn_castelnuovo_slope(6) == Fraction(45, 13) > Fraction(10, 3)


def test_double_cover_slope():
    assert double_cover_slope(5, 1) == 4
    assert double_cover_slope(7, 2) == Fraction(24, 5)
    with pytest.raises(PreconditionViolated):
        double_cover_slope(3, 3)


def test_domain_errors():
    with pytest.raises(PreconditionViolated):
        nonhyp_slope(2)
    with pytest.raises(PreconditionViolated):
        hn_castelnuovo_slope(13)
    with pytest.raises(PreconditionViolated):
        low_base_speed(2, 0)
    with pytest.raises(PreconditionViolated):
        few_fibers_speed(3, 4)


def test_nonhyp_speed_frozen_values():
    assert nonhyp_speed(3) == Fraction(8, 3)
    assert nonhyp_speed(4) == Fraction(7, 2)
    assert nonhyp_speed(5) == 4
    assert nonhyp_speed(6) == Fraction(52, 9)
    assert nonhyp_speed(7) == Fraction(20, 3)
    assert nonhyp_speed(12) == Fraction(100, 9)
    assert nonhyp_speed(13) == 12
    assert nonhyp_speed(41) == 40


def test_nonhyp_speed_piecewise_identity():
    for g in range(3, 42):
        expected = Fraction(2 * (2 * g - 2)) / nonhyp_slope(g)
        assert nonhyp_speed(g) == expected
        if 6 <= g <= 12:
            assert nonhyp_speed(g) == Fraction(8 * g + 4, 9)
        if g >= 13:
            assert nonhyp_speed(g) == g - 1


def test_low_base_speed():
    assert low_base_speed(2, 1) == Fraction(17, 9)
    assert low_base_speed(5, 2) == Fraction(175, 36)
    assert low_base_speed(8, 1) == Fraction(68, 9)


def test_optimal_base_change_is_nine():
    for g in range(2, 51):
        for m in range(1, 6):
            n, value = optimal_base_change(g, m)
            assert n == 9
            assert value == low_base_speed(g, m)
            # neighbours are strictly worse
            assert low_base_speed_at(g, m, 8) > value
            assert low_base_speed_at(g, m, 10) > value


def test_minimal_m():
    assert minimal_m(0, 5) == 1
    assert minimal_m(1, 7) == 1
    assert minimal_m(2, 2) == 2
    assert minimal_m(2, 1) == 3
    with pytest.raises(PreconditionViolated):
        minimal_m(0, 1)
    with pytest.raises(PreconditionViolated):
        minimal_m(1, 0)


def test_teichmueller_constants():
    assert teich_hyp_one_zero(2) == Fraction(4, 3)
    assert teich_hyp_two_zeros(2) == Fraction(3, 2)
    for g in range(2, 51):
        assert kodaira_speed(g) < teich_max(g) < arakelov_speed(g)


def test_few_fibers_speed():
    assert few_fibers_speed(3, 6) == Fraction(5, 2)
    assert few_fibers_speed(2, 5) == Fraction(4, 3)
    assert few_fibers_speed(2, 6) == Fraction(3, 2)
    with pytest.raises(PreconditionViolated):
        few_fibers_speed(3, 5)  # odd g*s


def test_bound_front_door():
    b = bound("arakelov_speed", g=5)
    assert b.value == 5 and b.strict and b.kind == "upper"
    b = bound("slope_lower", g=3)
    assert b.value == Fraction(8, 3) and not b.strict and b.kind == "lower"
    assert "Xiao" in bound("double_cover_slope", g=5, gamma=1).source
    with pytest.raises(KeyError):
        bound("no_such_bound", g=3)


# ---------------------------------------------------------------------------
# Harder-Narasimhan arithmetic

def test_hn_profile_validation():
    with pytest.raises(ValueError):
        HNProfile((2, 1), (Fraction(2), Fraction(1)))
    with pytest.raises(ValueError):
        HNProfile((1, 2), (Fraction(1), Fraction(2)))
    with pytest.raises(ValueError):
        HNProfile((1, 2), (Fraction(1), Fraction(-1)))
    with pytest.raises(ValueError):
        HNProfile((1, 2), (Fraction(3), Fraction(1)), degrees=(0, 1))


def test_hn_chi():
    assert hn_chi(HNProfile((4,), (Fraction(5, 2),))) == 10
    assert hn_chi(HNProfile((1, 2), (Fraction(3), Fraction(1)))) == 4


def test_hodge_partial_sums():
    p = HNProfile((1, 2), (Fraction(3), Fraction(1)))
    assert hodge_partial_sums(p) == [3, 4]
    assert hodge_partial_sums(p)[-1] == hn_chi(p)
    assert hodge_partial_sum_check(p, 0, 5, [1, Fraction(4, 3)])
    assert hodge_partial_sum_check(p, 0, 5, [2, Fraction(4, 3)])
    assert not hodge_partial_sum_check(p, 0, 5, [Fraction(1, 2), Fraction(4, 3)])
    assert not hodge_partial_sum_check(p, 0, 5, [1, 2])  # no equality at the top
    with pytest.raises(PreconditionViolated):
        hodge_partial_sum_check(p, 0, 2, [1, 1])
    with pytest.raises(ValueError):
        hodge_partial_sum_check(p, 0, 5, [1])


def test_xiao_trivial_sequence():
    p = HNProfile((1, 2), (Fraction(3), Fraction(1)), degrees=(0, 2))
    # with d_1 = 0 the trivial sequence gives (2g-2)(mu_1 + mu_n)
    assert xiao_lower_bound(p, (1, 2)) == (2 * 2 - 2) * (3 + 1)
    assert xiao_lower_bound(p, (2,)) == (4 * 2 - 4) * 1
    single = HNProfile((2,), (Fraction(5, 2),), degrees=(2,))
    assert xiao_lower_bound(single, (1,)) == (4 * 2 - 4) * Fraction(5, 2)


def test_xiao_errors():
    p = HNProfile((1, 2), (Fraction(3), Fraction(1)), degrees=(0, 2))
    for bad in ((), (2, 1), (0,), (3,)):
        with pytest.raises(BadIndexSequence):
            xiao_lower_bound(p, bad)
    with pytest.raises(PreconditionViolated):
        xiao_lower_bound(HNProfile((1, 2), (Fraction(3), Fraction(1))), (1, 2))


@settings(max_examples=80, deadline=None)
@given(
    mu2=st.fractions(min_value=0, max_value=10),
    gap=st.fractions(min_value=Fraction(1, 7), max_value=10),
    d1=st.integers(0, 2),
)
def test_xiao_genus_two_regime(mu2, gap, d1):
    # for g = 2 the trivial sequence sits between the slope inequality and
    # the Noether ceiling
    p = HNProfile((1, 2), (mu2 + gap, mu2), degrees=(d1, 2))
    chi = hn_chi(p)
    lower = xiao_lower_bound(p, (1, 2))
    assert slope_lower(2) * chi <= lower <= 12 * chi


# ---------------------------------------------------------------------------
# Castelnuovo degree test

def test_castelnuovo_examples():
    assert castelnuovo_holds(12, 4, 5)
    assert not castelnuovo_holds(8, 4, 5)
    # the boundary case d = 2g-2, r = g-1 falls short by direct evaluation
    for g in range(3, 21):
        assert not castelnuovo_holds(2 * g - 2, g - 1, g)
    with pytest.raises(PreconditionViolated):
        castelnuovo_holds(4, 1, 5)
    with pytest.raises(PreconditionViolated):
        castelnuovo_holds(4, 5, 5)


def test_castelnuovo_implies_double_rank():
    for g in range(3, 21):
        for r in range(2, g):
            for d in range(1, 6 * g + 1):
                if castelnuovo_holds(d, r, g):
                    assert d >= 2 * r, (d, r, g)
                if d == 2 * r - 1:
                    assert not castelnuovo_holds(d, r, g), (d, r, g)


# ---------------------------------------------------------------------------
# rendering

def test_decimal3():
    assert decimal3(Fraction(17, 9)) == "1.889"
    assert decimal3(Fraction(7, 2)) == "3.5"
    assert decimal3(Fraction(4)) == "4"
    assert decimal3(Fraction(30, 7)) == "4.286"
    assert decimal3(Fraction(52, 9)) == "5.778"
    assert decimal3(Fraction(1, 400)) == "0.003"  # exact half rounds up
    assert decimal3(Fraction(8, 5)) == "1.6"


TABLE1_ROWS = {
    "g_C <= 1 (m = 1)": ["1.889", "2.833", "3.778", "4.722", "5.667", "6.611", "7.556"],
    "g_C = 2 (m = 2)": ["1.944", "2.917", "3.889", "4.861", "5.833", "6.806", "7.778"],
}
TABLE2 = ["2.667", "3.5", "4", "5.778", "6.667", "7.556", "8.444", "9.333", "10.222"]
TABLE3 = ["1.6", "2.667", "3.2", "4", "4.286", "5", "6", "7"]


def test_table1_golden():
    t = table(1)
    assert t.genera == tuple(range(2, 9))
    for row in t.rows:
        assert [c[1] for c in row.cells] == TABLE1_ROWS[row.label]


def test_table2_golden():
    t = table(2)
    assert t.genera == tuple(range(3, 12))
    assert [c[1] for c in t.rows[0].cells] == TABLE2


def test_table3_golden():
    t = table(3)
    assert t.genera == tuple(range(2, 10))
    assert [c[1] for c in t.rows[0].cells] == TABLE3


def test_renderers():
    t = table(1)
    md = render_markdown(t)
    assert "| 1.889 |" in md and md.count("|") > 10
    csv = render_csv(t)
    assert csv.splitlines()[0] == "table,row,g,exact,decimal"
    assert "1,g_C <= 1 (m = 1),2,17/9,1.889" in csv
    with pytest.raises(ValueError):
        table(4)
