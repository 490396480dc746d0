"""Fibration invariants: slope, speed, Noether bookkeeping, and audits."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fibrato.fibration import (
    AuditReport,
    FiberNodeProfile,
    FibrationInvariants,
    IsotrivialDivisionByZero,
    NonHyperbolicBase,
    NonIntegralChi,
    PreconditionViolated,
    StableModelNodes,
    audit,
    canonical_class_bound,
    delta_f,
    fiber_delta,
    is_compact_type,
    noether_delta,
    nu,
    omega_upper_bound,
    r_f,
    relative_from_absolute,
    slope,
    speed,
)


def _inv(g=3, g_C=0, s=5, chi=3, omega_sq=8, delta=28, **kw):
    return FibrationInvariants(g, g_C, s, Fraction(chi), Fraction(omega_sq), Fraction(delta), **kw)


# ---------------------------------------------------------------------------
# construction and basic quantities

def test_invariants_validation():
    with pytest.raises(ValueError):
        _inv(g=1)
    with pytest.raises(ValueError):
        _inv(g_C=-1)
    with pytest.raises(ValueError):
        _inv(s=-2)


def test_slope_examples():
    assert slope(_inv(chi=3, omega_sq=8)) == Fraction(8, 3)
    assert slope(_inv(g=4, chi=16, omega_sq=52, delta=140)) == Fraction(13, 4)
    assert slope(_inv(chi=1, omega_sq=0, delta=12)) == 0


def test_slope_isotrivial():
    with pytest.raises(IsotrivialDivisionByZero):
        slope(_inv(chi=0, omega_sq=0, delta=0, s=0))


def test_speed_examples():
    assert speed(_inv(chi=3, g_C=0, s=5)) == 2
    assert speed(_inv(chi=3, g_C=0, s=27)) == Fraction(6, 25)
    assert speed(_inv(chi=4, g_C=1, s=3, omega_sq=11, delta=37)) == Fraction(8, 3)


def test_speed_changes_with_s_alone():
    base = _inv(chi=3, g_C=0, s=5)
    moved = _inv(chi=3, g_C=0, s=27)
    assert speed(base) != speed(moved)


def test_speed_non_hyperbolic():
    with pytest.raises(NonHyperbolicBase):
        speed(_inv(g_C=0, s=2))
    with pytest.raises(NonHyperbolicBase):
        speed(_inv(g_C=1, s=0))


def test_noether_delta():
    assert noether_delta(8, 3) == 28
    assert noether_delta(12, 1) == 0
    n, g = 4, 3
    omega = 8 - 4 * n + 8 * (g - 1)
    assert noether_delta(omega, g) == 4 + 4 * n + 4 * (g - 1)


def test_relative_from_absolute_locally_trivial():
    for g, g_C in ((2, 3), (5, 0), (7, 1)):
        base = (g_C - 1) * (g - 1)
        assert relative_from_absolute(8 * base, 4 * base, g, g_C) == (0, 0, 0)


def test_relative_from_absolute_extremal_surface():
    # c1^2 = 3*c2 with c2 = 4(g-1)(g_C-1) gives chi = (g-1)(2*g_C-2)/6
    g, g_C = 7, 3
    base = (g_C - 1) * (g - 1)
    omega, chi, delta = relative_from_absolute(12 * base, 4 * base, g, g_C)
    assert chi == Fraction((g - 1) * (2 * g_C - 2), 6)
    assert omega == 4 * base
    assert delta == 0


def test_relative_from_absolute_rejects_non_integral():
    with pytest.raises(NonIntegralChi):
        relative_from_absolute(5, 5, 3, 1)


def test_fiber_delta():
    assert fiber_delta(3, 3, 4) == 3
    assert fiber_delta(5, 0, 1) == 5
    assert fiber_delta(2, 0, 1) == 2
    assert is_compact_type(3, 3) and not is_compact_type(3, 2)
    with pytest.raises(ValueError):
        fiber_delta(3, 4, 1)
    with pytest.raises(ValueError):
        fiber_delta(3, 1, 0)


def test_stable_model_sums():
    nodes = StableModelNodes((0, 0, 1))
    assert r_f(nodes) == Fraction(5, 2)
    assert delta_f(nodes) == 4
    empty = StableModelNodes(())
    assert r_f(empty) == 0 and delta_f(empty) == 0
    assert nu(0) == 0
    assert nu(1) == Fraction(3, 2)
    with pytest.raises(ValueError):
        StableModelNodes((-1,))


def test_omega_upper_bound_limit_and_domain():
    assert omega_upper_bound(2, 1, 0, 0, 1) == 0
    g, g_C, s, r = 3, 2, 4, Fraction(7, 2)
    cap = Fraction(canonical_class_bound(g, g_C, s))
    far = omega_upper_bound(g, g_C, s, r, 10**9)
    assert abs(far - cap) < Fraction(1, 10**6)
    with pytest.raises(PreconditionViolated):
        omega_upper_bound(3, 0, 5, 0, 1)
    # n = 2 is the first admissible base change over a rational base with s = 5
    assert omega_upper_bound(3, 0, 5, 0, 2) == Fraction(12) - Fraction(4 * 5, 2)
    with pytest.raises(PreconditionViolated):
        omega_upper_bound(3, 1, 1, 0, 0)


def test_omega_upper_bound_monotone_until_nine():
    # with the node-ratio cap substituted, the bound decreases on n in 2..9
    for g in (2, 3, 5, 12):
        for g_C in (1, 2):
            for s in (1, 4):
                r = Fraction((3 * g - 3) * s)
                values = [omega_upper_bound(g, g_C, s, r, n) for n in range(2, 10)]
                assert all(a > b for a, b in zip(values, values[1:]))
                # and it grows again just past nine
                assert omega_upper_bound(g, g_C, s, r, 10) > values[-1]


# ---------------------------------------------------------------------------
# audits

def _by_name(report: AuditReport) -> dict:
    return {c.check: c for c in report.checks}


def test_audit_passes_reference_record():
    report = audit(_inv())
    assert report.passed
    checks = _by_name(report)
    assert checks["noether-identity"].status == "pass"
    assert checks["five-fibers"].status == "pass"
    assert checks["arakelov-speed"].strict


def test_audit_flags_forged_delta():
    report = audit(_inv(delta=40))
    checks = _by_name(report)
    assert checks["noether-identity"].status == "fail"
    assert not report.passed


def test_audit_slope_12_iff_smooth():
    # delta > 0 with s = 0 declared: Noether holds but the slope test fails
    rec = _inv(g_C=2, s=0, chi=2, omega_sq=16, delta=8)
    checks = _by_name(audit(rec))
    assert checks["noether-identity"].status == "pass"
    assert checks["slope-12-iff-smooth"].status == "fail"
    # smooth record with slope 12 passes it
    rec = _inv(g_C=2, s=0, chi=2, omega_sq=24, delta=0)
    assert _by_name(audit(rec))["slope-12-iff-smooth"].status == "pass"


def test_audit_slope_bounds():
    rec = _inv(g=3, g_C=2, s=1, chi=3, omega_sq=2, delta=34)
    checks = _by_name(audit(rec))
    assert checks["slope-lower"].status == "fail"  # 2/3 < 8/3
    rec = _inv(g=3, g_C=2, s=1, chi=1, omega_sq=13, delta=-1)
    checks = _by_name(audit(rec))
    assert checks["slope-upper"].status == "fail"


def test_audit_strict_equalities_fail():
    # speed exactly g
    rec = _inv(g=3, g_C=1, s=2, chi=3, omega_sq=5, delta=31)
    checks = _by_name(audit(rec))
    assert checks["arakelov-speed"].status == "fail"
    # omega_sq exactly at the canonical-class cap
    rec = _inv(g=3, g_C=1, s=1, chi=1, omega_sq=4, delta=8)
    checks = _by_name(audit(rec))
    assert checks["canonical-class"].status == "fail"


def test_audit_gating():
    checks = _by_name(audit(_inv(semistable=False)))
    assert checks["arakelov-speed"].status == "skipped"
    assert checks["canonical-class"].status == "skipped"
    checks = _by_name(audit(_inv(g_C=1, s=0, chi=0, omega_sq=0, delta=0)))
    assert checks["slope-lower"].status == "skipped"
    assert checks["arakelov-speed"].status == "skipped"
    checks = _by_name(audit(_inv(g_C=3, s=2)))
    assert checks["five-fibers"].status == "skipped"


def test_audit_five_fibers():
    rec = _inv(s=4, chi=1, omega_sq=2, delta=10)
    assert _by_name(audit(rec))["five-fibers"].status == "fail"


def test_audit_node_ratio():
    rec = _inv()
    nodes = StableModelNodes((0,) * 28)
    checks = _by_name(audit(rec, nodes=nodes))
    assert checks["node-ratio"].status == "pass"  # 28 <= (3g-3)s = 30
    nodes = StableModelNodes((0,) * 31)
    checks = _by_name(audit(rec, nodes=nodes))
    assert checks["node-ratio"].status == "fail"


def test_audit_fiber_profiles():
    good = FiberNodeProfile(3, 1, 2, {0: 2, 1: 1})
    bad = FiberNodeProfile(3, 1, 2, {0: 0, 1: 3})  # claims compact type at g_geo < g
    checks = _by_name(audit(_inv(), profiles=[good, bad]))
    assert checks["fiber-profile-0"].status == "pass"
    assert checks["fiber-profile-1"].status == "fail"


def test_profile_validation():
    with pytest.raises(ValueError):
        FiberNodeProfile(3, 4, 1, {})
    with pytest.raises(ValueError):
        FiberNodeProfile(3, 1, 0, {})
    with pytest.raises(ValueError):
        FiberNodeProfile(3, 1, 1, {2: 1})  # index above floor(g/2)


def test_report_json_shape():
    payload = audit(_inv()).to_json()
    assert payload["schema_version"] == 1
    first = payload["checks"][0]
    assert set(first) >= {"check", "status", "lhs", "rhs", "strict"}
    assert first["check"] == "noether-identity"
    assert first["lhs"] == "28"
    lam = next(c for c in payload["checks"] if c["check"] == "slope-lower")
    assert lam["lhs"] == "8/3"


# ---------------------------------------------------------------------------
# quantified properties

@settings(max_examples=60, deadline=None)
@given(chi=st.fractions(min_value=Fraction(1, 100), max_value=Fraction(100)))
def test_slope_12_records_are_smooth(chi):
    assert noether_delta(12 * chi, chi) == 0


@settings(max_examples=60, deadline=None)
@given(
    g=st.integers(2, 12),
    g_C=st.integers(1, 5),
    s=st.integers(1, 10),
    chi=st.integers(1, 40),
    omega=st.integers(1, 40),
    d=st.integers(1, 6),
)
def test_slope_and_speed_base_change_covariance(g, g_C, s, chi, omega, d):
    rec = FibrationInvariants(g, g_C, s, Fraction(chi), Fraction(omega),
                              noether_delta(omega, chi))
    scaled = FibrationInvariants(
        g, d * (g_C - 1) + 1, d * s, Fraction(d * chi), Fraction(d * omega),
        noether_delta(d * omega, d * chi))
    assert slope(scaled) == slope(rec)
    assert speed(scaled) == speed(rec)
