"""Cross-cutting invariants, checked over the working corpus of polynomials."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from satopo.algnum import cmp_values, merge_values
from satopo.bpoly import BPoly
from satopo.euler import chi_c
from satopo.identities import verify
from satopo.infinity import (certified_radius, generic_basepoint,
                             half_branches, is_proper, jump_sets,
                             lambda_mu_nu, lambda_set, link_chi, r_infinity)
from satopo.parsing import parse_poly


def P(s):
    return parse_poly(s)


CORPUS = ["x^2 + y^2", "x^2 - y^2", "x^3 - 3*x*y^2", "-x^2 - y^2",
          "x*(x*y - 1)", "x^3 - x + y^2", "x^4 + y^4 + x", "x"]

PROPER = ["x^2 + y^2", "-x^2 - y^2", "x^4 + y^4 + x"]


def _base(f):
    return generic_basepoint(f, 0)


def _shift(f, d):
    return f - BPoly.const(Fraction(d), f.vars)


# ---- asymptotic value sets --------------------------------------------------


@pytest.mark.parametrize("s", CORPUS)
def test_jump_sets_contained_in_the_asymptotic_set(s):
    f = P(s)
    a = _base(f)
    lam = lambda_set(f, a)
    for js in jump_sets(f, a):
        for v in js.values:
            assert v in lam


@pytest.mark.parametrize("s", CORPUS)
def test_any_two_jump_sets_cover_the_same_values(s):
    f = P(s)
    le, eq, ge = jump_sets(f, _base(f))
    unions = [merge_values(a.values, b.values)
              for a, b in ((le, eq), (le, ge), (eq, ge))]
    base = unions[0]
    for other in unions[1:]:
        assert len(other) == len(base)
        assert all(cmp_values(u, v) == 0 for u, v in zip(base, other))


@pytest.mark.parametrize("s", PROPER)
def test_proper_members_have_no_asymptotic_jumps(s):
    f = P(s)
    a = _base(f)
    assert is_proper(f, a)
    assert len(lambda_set(f, a)) == 0
    for alpha in (Fraction(-2), Fraction(0), Fraction(3, 2)):
        lam, mu, _ = lambda_mu_nu(f, a, alpha)
        assert lam == 0 and mu == 0


@pytest.mark.parametrize("s", [s for s in CORPUS if s not in PROPER])
def test_nonproper_members_are_flagged(s):
    f = P(s)
    assert not is_proper(f, _base(f))


# ---- links and branches -----------------------------------------------------


@pytest.mark.parametrize("s", CORPUS)
def test_curves_cross_large_circles_an_even_number_of_times(s):
    f = P(s)
    for d in (-1, 0, 1):
        assert half_branches(_shift(f, d)) % 2 == 0


@pytest.mark.parametrize("s", CORPUS)
def test_eq_link_is_twice_the_branch_count(s):
    f = P(s)
    for d in (Fraction(-1), Fraction(1, 2)):
        assert link_chi(f, d, "eq") == 2 * r_infinity(_shift(f, d))


@pytest.mark.parametrize("s", ["x^2 + y^2", "x^2 - y^2",
                               "x*(x*y - 1)", "x^3 - x + y^2"])
def test_circle_morse_data_stable_under_radius_doubling(s):
    from satopo.infinity import _index_sums, _morse_data
    f = P(s)
    a = _base(f)
    r0 = certified_radius(f, a)
    one = _morse_data(f, a, 2 * r0)
    two = _morse_data(f, a, 4 * r0)
    assert len(one) == len(two)
    for alpha in (Fraction(-1), Fraction(0), Fraction(2)):
        assert _index_sums(one, alpha) == _index_sums(two, alpha)


# ---- Euler characteristic bookkeeping ----------------------------------------


@settings(max_examples=12, deadline=None)
@given(num=st.integers(-8, 8), den=st.integers(1, 6),
       idx=st.integers(0, len(CORPUS) - 1))
def test_chi_c_flavors_add_up_to_the_plane(num, den, idx):
    f = P(CORPUS[idx])
    alpha = Fraction(num, den)
    total = chi_c(f, alpha, "le") + chi_c(f, alpha, "ge") \
        - chi_c(f, alpha, "eq")
    assert total == 1


@pytest.mark.parametrize("s", CORPUS)
def test_chi_is_constant_on_each_plateau(s):
    rep = verify("P3.19", P(s))
    assert rep.passed, rep.line()


# ---- seed independence ------------------------------------------------------


def test_branch_count_ladder_is_seed_independent():
    f = P("x*(x*y - 1)")
    reports = [verify("SEKALSKI", f, seed=k) for k in (0, 1, 2)]
    assert all(r.passed for r in reports)
    assert len({(r.lhs, r.rhs) for r in reports}) == 1
