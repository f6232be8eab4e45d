"""Asymptotic analysis: tangency curves, certified radii, links, value sets."""

from fractions import Fraction

import pytest

from satopo.bpoly import BPoly
from satopo.critical import InfiniteCriticalSetError
from satopo.infinity import (DegenerateBasepointError, certified_radius,
                             circle_morse_data, gamma_polynomial,
                             generic_basepoint, half_branches, is_proper,
                             jump_sets, lambda_mu_nu, lambda_set, link_chi,
                             r_infinity)
from satopo.parsing import parse_poly

A = (Fraction(1, 3), Fraction(1, 2))


def P(s):
    return parse_poly(s)


# ---- tangency curve and basepoints ----------------------------------------------

def test_gamma_of_distance_squared():
    gam = gamma_polynomial(P("x^2 + y^2"), (1, 0))
    assert gam.h == P("-2*y")
    assert gam.base == (1, 0)


def test_gamma_of_linear():
    assert gamma_polynomial(P("x"), (0, 0)).h == P("-y")


def test_gamma_degenerate_at_symmetry_center():
    with pytest.raises(DegenerateBasepointError):
        gamma_polynomial(P("x^2 + y^2"), (0, 0))
    with pytest.raises(DegenerateBasepointError):
        gamma_polynomial(P("((x-3)^2 + (y-7)^2)^2"), (3, 7))


def test_generic_basepoint_avoids_planted_symmetry():
    f = P("((x-3)^2 + (y-7)^2)^2")
    a = generic_basepoint(f, 7)
    assert tuple(a) != (3, 7)
    assert generic_basepoint(f, 7) == a  # deterministic in (f, seed)
    assert gamma_polynomial(f, a).h != BPoly.zero()


def test_generic_basepoint_deterministic_and_valid():
    f = P("x*(x*y - 1)")
    a = generic_basepoint(f, 0)
    assert generic_basepoint(f, 0) == a
    lam = lambda_set(f, a)
    assert len(lam) == 1 and 0 in lam


# ---- certified radii -------------------------------------------------------------

def test_radius_encloses_origin_critical_point():
    assert certified_radius(P("x^2 + y^2"), (1, 0)) >= 2


def test_radius_positive_for_linear():
    assert certified_radius(P("x"), (0, 0)) > 0


def test_radius_beats_critical_root_bound():
    # critical points of x^3 - 3x + y^2 sit at (±1, 0)
    assert certified_radius(P("x^3 - 3*x + y^2"), A) > 1


# ---- Morse data on circles -------------------------------------------------------

def test_morse_data_linear_on_unit_circle():
    pts = circle_morse_data(P("x"), (0, 0), 1)
    assert len(pts) == 2
    right, left = pts
    assert right.mu_sign == 1 and right.circle_index == -1
    assert right.f_value.as_rational() == 1
    assert left.point.is_antipode
    assert left.mu_sign == -1 and left.circle_index == 1
    assert left.f_value.as_rational() == -1


def test_morse_data_distance_squared_off_center():
    # on S_5((1,0)) the radial derivative 2x(x-1) is positive at both
    # tangency points (6,0) and (-4,0); the far point is the max of f
    pts = circle_morse_data(P("x^2 + y^2"), (1, 0), 5)
    assert len(pts) == 2
    far, near = pts
    assert far.f_value.as_rational() == 36 and far.circle_index == -1
    assert near.f_value.as_rational() == 16 and near.circle_index == 1
    assert far.mu_sign == 1 and near.mu_sign == 1


def test_morse_data_intervals_separate_distinct_values():
    pts = circle_morse_data(P("x*(x*y - 1)"), A, certified_radius(P("x*(x*y - 1)"), A))
    vals = sorted(p.f_interval for p in pts)
    for (lo1, hi1), (lo2, hi2) in zip(vals, vals[1:]):
        assert hi1 < lo2 or (lo1, hi1) == (lo2, hi2)


# ---- index sums ------------------------------------------------------------------

def test_sums_for_linear():
    assert lambda_mu_nu(P("x"), (0, 0), 0) == (0, 0, 1)


def test_sums_vanish_for_proper():
    f = P("x^2 + y^2")
    for alpha in (-1, 0, 1, 7):
        assert lambda_mu_nu(f, (1, 0), alpha) == (0, 0, 0)


def test_sums_for_negated_distance():
    assert lambda_mu_nu(P("-x^2 - y^2"), (1, 0), 0) == (0, 0, 0)


def test_sums_for_saddle():
    # circle max/min pattern of x^2 - y^2: the two low points carry inward
    # gradient and index +1 each, everything else filters out
    assert lambda_mu_nu(P("x^2 - y^2"), A, 0) == (0, 0, 2)


def test_sums_basepoint_independent():
    f = P("x*(x*y - 1)")
    b = (Fraction(-2), Fraction(3, 4))
    for alpha in (-1, 0, 2):
        assert lambda_mu_nu(f, A, alpha) == lambda_mu_nu(f, b, alpha)


# ---- links at infinity -----------------------------------------------------------

def test_link_of_linear():
    f = P("x")
    assert link_chi(f, 0, "eq") == 2
    assert link_chi(f, 0, "le") == 1
    assert link_chi(f, 0, "ge") == 1


def test_link_of_distance_squared():
    f = P("x^2 + y^2")
    for flavor in ("eq", "le", "ge"):
        assert link_chi(f, 1, flavor) == 0


def test_link_of_hyperbola_levels():
    assert link_chi(P("x*y"), 0, "eq") == 4
    for t in (-1, 0, 1):
        assert link_chi(P("x*y"), t, "eq") == 4


def test_link_flavor_aliases():
    assert link_chi(P("x"), 0, "=") == 2
    assert link_chi(P("x"), 0, "<=") == 1
    assert link_chi(P("x"), 0, ">=") == 1


def test_link_jump_at_broughton_value():
    f = P("x*(x*y - 1)")
    assert link_chi(f, -1, "eq") == 4
    assert link_chi(f, 0, "eq") == 6
    assert link_chi(f, 1, "eq") == 4


def test_link_matches_half_branch_count():
    for s, alpha in (("x", 0), ("x*y", 1), ("x*(x*y - 1)", 0),
                     ("x*(x*y - 1)", 2), ("x^2 - y^2", -3)):
        f = P(s)
        g = f - BPoly.const(alpha)
        assert link_chi(f, alpha, "eq") == 2 * r_infinity(g)


# ---- asymptotic critical values --------------------------------------------------

def test_lambda_empty_for_proper():
    assert len(lambda_set(P("x^2 + y^2"), (1, 0))) == 0


def test_lambda_empty_for_linear():
    assert len(lambda_set(P("x"), (0, 0))) == 0


def test_lambda_empty_for_hyperbola():
    assert len(lambda_set(P("x*y"), A)) == 0


def test_lambda_of_broughton():
    lam = lambda_set(P("x*(x*y - 1)"), A)
    assert len(lam) == 1
    assert lam.values[0].as_rational() == 0


def test_lambda_basepoint_independent():
    f = P("x*(x*y - 1)")
    for b in ((Fraction(-2), Fraction(3, 4)), (Fraction(1), Fraction(-1, 2))):
        other = lambda_set(f, b)
        assert len(other) == 1 and 0 in other


def test_jump_sets_of_broughton():
    le, eq, ge = jump_sets(P("x*(x*y - 1)"), A)
    assert [v.as_rational() for v in eq.values] == [0]
    assert [v.as_rational() for v in le.values] == [0]
    assert [v.as_rational() for v in ge.values] == [0]
    assert le.flavor == "le" and eq.flavor == "eq" and ge.flavor == "ge"


def test_jump_sets_empty_for_tame():
    for s, a in (("x^2 + y^2", (1, 0)), ("x", (0, 0)), ("x*y", A)):
        le, eq, ge = jump_sets(P(s), a)
        assert len(le) == len(eq) == len(ge) == 0


def test_infinite_critical_set_detected():
    with pytest.raises(InfiniteCriticalSetError):
        certified_radius(P("x^2*y^2"), A)


# ---- properness ------------------------------------------------------------------

def test_properness_classification():
    assert is_proper(P("x^2 + y^2"), (1, 0))
    assert is_proper(P("((x-3)^2 + (y-7)^2)^2"), (0, 0))
    assert not is_proper(P("x"), (0, 0))
    assert not is_proper(P("x*y"), A)
    assert not is_proper(P("x*(x*y - 1)"), A)
    assert not is_proper(P("x^3 - 3*x + y^2"), A)


# ---- half-branches ---------------------------------------------------------------

def test_half_branches_of_line():
    assert half_branches(P("x")) == 2
    assert r_infinity(P("x")) == 1


def test_half_branches_of_broughton_zero_set():
    assert half_branches(P("x*(x*y - 1)")) == 6
    assert r_infinity(P("x*(x*y - 1)")) == 3


def test_half_branches_of_compact_curve():
    assert half_branches(P("x^2 + y^2 - 1")) == 0
    assert r_infinity(P("x^2 + y^2 - 1")) == 0


def test_half_branches_of_parabola_and_cubic():
    assert half_branches(P("y - x^2")) == 2
    assert half_branches(P("y^2 - x^3")) == 2
    assert half_branches(P("x^2 - y^2")) == 4


# ---- stability under radius doubling ---------------------------------------------

def test_morse_summary_stable_under_doubling():
    from satopo.infinity import _index_sums, _morse_data
    for s, alpha in (("x*(x*y - 1)", Fraction(0)), ("x^2 - y^2", Fraction(1))):
        f = P(s)
        r0 = certified_radius(f, A)
        one = _morse_data(f, A, 2 * r0)
        two = _morse_data(f, A, 4 * r0)
        assert len(one) == len(two)
        assert _index_sums(one, alpha) == _index_sums(two, alpha)
        assert sorted(p.mu_sign for p in one) == sorted(p.mu_sign for p in two)
        assert sorted(p.circle_index for p in one) == sorted(p.circle_index for p in two)
