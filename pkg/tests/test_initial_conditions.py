"""Initial-data families against frozen arbitrary-precision oracles.

All reference constants below were computed with mpmath at 40 digits
before the implementation existed: the arc normalizer b, arc-length
values c(x), slopes dc/dx, and the a = L degenerate-looking case whose
denominator reduces to L^2 (1 - sqrt(3)/4 - pi/6).
"""

import numpy as np
import pytest

from adhestring.errors import ParameterDomainError
from adhestring.initial_conditions import (
    c1_arc,
    c1_arc_shift_half,
    c1_arc_shift_middle,
    c1_arc_velocity,
    c2_cubic,
    eval_b,
    eval_c,
    eval_dc_dx,
    eval_f_eta,
    ic_to_string,
    load_tabulated,
    mollified_quadratic,
    neumann_compatibility,
    parse_ic,
    sample_ic,
    tabulated,
    uniform,
)

B_6_10 = 0.12574048812261496          # mpmath, 40 digits
C_HALF_6_10 = 3.9764439240320786      # c(5) = 1/(2b)
C_FULL_6_10 = 7.952887848064157       # c(10) = 1/b
C_1_6_10 = 0.02789468249578403
C_7_6_10 = 7.1718944428934845
DC_1_6_10 = 0.08392021690038395
DC_5_6_10 = 2.6833752096446
DC_7_6_10 = 0.8038475772933681
AEQL_FACTOR = 0.0433885225094818      # 1 - sqrt(3)/4 - pi/6


def test_eval_b_reference_value():
    assert eval_b(6, 10) == pytest.approx(B_6_10, rel=1e-14)


def test_eval_b_a_equals_L():
    # denominator reduces to L^2 (1 - sqrt(3)/4 - pi/6) > 0
    assert eval_b(10, 10) == pytest.approx(1 / (100 * AEQL_FACTOR), rel=1e-13)
    assert eval_b(10, 10) > 0


def test_eval_b_domain_errors():
    with pytest.raises(ParameterDomainError):
        eval_b(5, 10)  # a = L/2: radicand boundary excluded
    with pytest.raises(ParameterDomainError):
        eval_b(4, 10)
    with pytest.raises(ParameterDomainError):
        eval_b(6, -1)


def test_eval_c_reference_values():
    assert eval_c(0.0, 6, 10) == pytest.approx(0.0, abs=1e-15)
    assert eval_c(1.0, 6, 10) == pytest.approx(C_1_6_10, rel=1e-12)
    assert eval_c(5.0, 6, 10) == pytest.approx(C_HALF_6_10, rel=1e-13)
    assert eval_c(7.0, 6, 10) == pytest.approx(C_7_6_10, rel=1e-12)
    assert eval_c(10.0, 6, 10) == pytest.approx(C_FULL_6_10, rel=1e-13)


def test_normalization_identities():
    # the midpoint carries half the full arc because dc/dx is symmetric
    # about L/2: b*c(L) = 1 and b*c(L/2) = 1/2
    b = eval_b(6, 10)
    assert b * eval_c(10.0, 6, 10) == pytest.approx(1.0, abs=1e-12)
    assert b * eval_c(5.0, 6, 10) == pytest.approx(0.5, abs=1e-12)


def test_eval_c_branch_agreement_at_midpoint():
    # one ulp across the boundary switches the active branch formula
    lo = eval_c(np.nextafter(5.0, 0.0), 6, 10)
    hi = eval_c(np.nextafter(5.0, 10.0), 6, 10)
    assert abs(hi - lo) / abs(hi) < 1e-10


def test_eval_c_monotone_and_continuous():
    x = np.linspace(0, 10, 4001)
    c = eval_c(x, 6, 10)
    assert np.all(np.diff(c) >= -1e-14)
    assert np.max(np.abs(np.diff(c))) < 10 * (x[1] - x[0])  # Lipschitz


def test_eval_c_domain_error():
    with pytest.raises(ParameterDomainError):
        eval_c(-0.5, 6, 10)
    with pytest.raises(ParameterDomainError):
        eval_c(10.5, 6, 10)


def test_dc_dx_reference_values():
    assert eval_dc_dx(1.0, 6, 10) == pytest.approx(DC_1_6_10, rel=1e-13)
    assert eval_dc_dx(5.0, 6, 10) == pytest.approx(DC_5_6_10, rel=1e-13)
    assert eval_dc_dx(7.0, 6, 10) == pytest.approx(DC_7_6_10, rel=1e-13)
    assert eval_dc_dx(0.0, 6, 10) == pytest.approx(0.0, abs=1e-15)
    assert eval_dc_dx(10.0, 6, 10) == pytest.approx(0.0, abs=1e-15)


def test_dc_dx_matches_centered_differences():
    # away from the curvature jump at L/2
    for h in (1e-3, 1e-4, 1e-5):
        for x in (1.0, 2.5, 4.0, 6.0, 7.0, 9.0):
            fd = (eval_c(x + h, 6, 10) - eval_c(x - h, 6, 10)) / (2 * h)
            assert abs(fd - eval_dc_dx(x, 6, 10)) <= 10 * h * h


def test_c2_cubic_samples():
    ic = c2_cubic(0.006, 1.2)
    u0, u1 = sample_ic(ic, np.array([0.0, 10.0]))
    assert u0[0] == 0.0
    assert u1[0] == 1.2 and u1[1] == 1.2
    assert u0[1] == pytest.approx(-0.006 * 1000 / 6, rel=1e-14)


def test_arc_family_midpoint_values():
    u0, _ = sample_ic(c1_arc(0.7, 1.1), np.array([0.0, 5.0, 10.0]))
    assert u0[0] == pytest.approx(0.0, abs=1e-14)
    assert u0[1] == pytest.approx(0.35, abs=1e-12)   # xi0 * b*c(L/2)
    assert u0[2] == pytest.approx(0.7, abs=1e-12)    # xi0 * b*c(L)

    u0, _ = sample_ic(c1_arc_shift_middle(0.7, -1.2), np.array([5.0]))
    assert u0[0] == pytest.approx(1.0, abs=1e-12)    # pinned at threshold

    u0, _ = sample_ic(c1_arc_shift_half(0.7, -1.2), np.array([0.0, 5.0, 10.0]))
    assert u0[0] == pytest.approx(0.35, abs=1e-12)
    assert u0[1] == pytest.approx(0.7, abs=1e-12)
    assert u0[2] == pytest.approx(1.05, abs=1e-12)


def test_arc_velocity_profile():
    ic = c1_arc_velocity(0.7, 0.8)
    u0m, u1m = sample_ic(ic, np.array([0.0, 5.0, 10.0]))
    ref0, _ = sample_ic(c1_arc_shift_middle(0.7, 0.8), np.array([0.0, 5.0, 10.0]))
    assert np.allclose(u0m, ref0, atol=0, rtol=0)
    assert u1m[0] == pytest.approx(0.0, abs=1e-14)
    assert u1m[2] == pytest.approx(0.0, abs=1e-14)
    assert u1m[1] == pytest.approx(0.8 * B_6_10 * DC_5_6_10, rel=1e-12)


def test_mollified_quadratic_shape():
    ic = mollified_quadratic(0.5, 1.4, eta=0.3)
    u0, u1 = sample_ic(ic, np.array([0.0, 5.0, 10.0]))
    assert u0[0] == 0.0 and u0[2] == 0.0
    assert u0[1] == pytest.approx(0.5, rel=1e-13)  # peak value is xi0
    assert np.all(u1 == 1.4)


def test_f_eta_branch_agreement_and_slope():
    eta, L = 0.3, 10.0
    for knot in (L / 2 - eta, L / 2 + eta):
        lo = eval_f_eta(np.nextafter(knot, 0.0), eta, L)
        hi = eval_f_eta(np.nextafter(knot, L), eta, L)
        assert abs(hi - lo) / abs(hi) < 1e-10
        h = 1e-6
        sl = (eval_f_eta(knot, eta, L) - eval_f_eta(knot - h, eta, L)) / h
        sr = (eval_f_eta(knot + h, eta, L) - eval_f_eta(knot, eta, L)) / h
        assert abs(sl - sr) < 1e-4  # C1 join


def test_every_family_is_bounded_and_finite():
    x = np.linspace(0, 10, 1234)
    ics = [
        c2_cubic(0.006, 1.2),
        c1_arc(0.7, 1.1),
        c1_arc_shift_middle(0.7, -1.2),
        c1_arc_shift_half(0.7, -1.2),
        c1_arc_velocity(0.7, 0.8),
        mollified_quadratic(0.5, 1.4, eta=0.3),
        uniform(1.0, 0.0),
    ]
    for ic in ics:
        u0, u1 = sample_ic(ic, x)
        assert np.all(np.isfinite(u0)) and np.all(np.isfinite(u1))
        assert np.max(np.abs(u0)) < 10 and np.max(np.abs(u1)) < 10


def test_tabulated_interpolation_and_validation():
    ic = tabulated([0.0, 5.0, 10.0], [0.0, 1.0, 0.0], [2.0, 2.0, 2.0])
    u0, u1 = sample_ic(ic, np.array([2.5, 7.5]))
    assert np.allclose(u0, [0.5, 0.5], atol=1e-15)
    assert np.allclose(u1, [2.0, 2.0], atol=0)
    with pytest.raises(ParameterDomainError):
        tabulated([0.0, 0.0, 10.0], [0, 1, 0], [0, 0, 0])  # not increasing
    with pytest.raises(ParameterDomainError):
        tabulated([0.0, 5.0], [0, 1, 0], [0, 0, 0])        # ragged columns
    with pytest.raises(ParameterDomainError):
        tabulated([0.0], [0.0], [0.0])                     # too short
    with pytest.raises(ParameterDomainError):
        tabulated([0.0, 5.0, 9.0], [0, 1, 0], [0, 0, 0], L=10.0)  # no cover


def test_load_tabulated_round_trip(tmp_path):
    p = tmp_path / "ic.csv"
    p.write_text("x,u0,u1\n0.0,0.25,2.0\n5.0,1.0,2.0\n10.0,0.25,2.0\n")
    ic = load_tabulated(str(p))
    assert ic.L == 10.0
    u0, u1 = sample_ic(ic, np.array([0.0, 5.0]))
    assert u0[0] == 0.25 and u0[1] == 1.0 and u1[0] == 2.0
    assert ic_to_string(ic) == f"file:{p}"


def test_neumann_compatibility_flags():
    rep = neumann_compatibility(c2_cubic(0.006, 1.2))
    assert rep.u0_compliant          # slope xi0 (x^2 - L x) vanishes at ends
    assert not rep.u1_compliant      # constant velocity 1.2 at both ends
    assert rep.u1_left == 1.2 and rep.u1_right == 1.2
    assert not rep.compliant

    rep = neumann_compatibility(uniform(1.0, 0.0))
    assert rep.compliant

    # the velocity family is the one fully compatible nontrivial member
    rep = neumann_compatibility(c1_arc_velocity(0.7, 0.8), tolerance=1e-6)
    assert rep.compliant


def test_sample_ic_rejects_bad_nodes():
    ic = uniform(0.0, 0.0)
    with pytest.raises(ParameterDomainError):
        sample_ic(ic, np.array([0.0, 11.0]))
    with pytest.raises(ParameterDomainError):
        sample_ic(ic, np.array([5.0, 1.0]))


@pytest.mark.parametrize(
    "text",
    [
        "c2:0.006,1.2",
        "c1:0.7,1.1,6.0",
        "c1mid:0.7,-1.2,6.0",
        "c1half:0.7,-1.2,6.0",
        "c1vel:0.7,0.8,6.0",
        "moll:0.5,1.4,0.3",
        "uniform:1.0,0.0",
    ],
)
def test_parse_round_trip(text):
    ic = parse_ic(text, L=10.0)
    assert parse_ic(ic_to_string(ic), L=10.0) == ic


def test_parse_errors():
    for bad in ("", "c2", "c2:1", "c2:a,b", "nosuch:1,2", "c1:0.7,1.1"):
        with pytest.raises(ParameterDomainError):
            parse_ic(bad)
