"""Stratified sets: certification, critical points, directions, Gauss-Bonnet."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from satopo.parsing import parse_poly
from satopo.solve2 import InfiniteZeroSetError
from satopo.strata import (BadDirectionError, Direction,
                           SingularBoundaryError, bad_directions, chi_set,
                           direction_arcs, gauss_bonnet, link_set,
                           linear_morse_summary, plane_set,
                           stratified_critical_points, stratified_index)


def P(s):
    return parse_poly(s)


def DISK():
    return plane_set(P("x^2 + y^2 - 1"), "region")


def CIRC():
    return plane_set(P("x^2 + y^2 - 1"), "curve")


def HALF():
    return plane_set(P("y"), "region")


def PARA():
    return plane_set(P("y - x^2"), "region")


# ---- certification -----------------------------------------------------------


def test_plane_set_rejects_singular_boundaries():
    with pytest.raises(SingularBoundaryError):
        plane_set(P("x^2 - y^2"), "curve")  # node at the origin
    with pytest.raises(SingularBoundaryError):
        plane_set(P("x^2"), "curve")  # doubled line
    with pytest.raises(SingularBoundaryError):
        plane_set(P("x^2 + y^2"), "curve")  # isolated point
    with pytest.raises(SingularBoundaryError):
        plane_set(P("y^2 - x^3"), "curve")  # cusp


def test_plane_set_rejects_empty_sets():
    with pytest.raises(ValueError):
        plane_set(P("x^2 + y^2 + 1"), "curve")
    with pytest.raises(ValueError):
        plane_set(P("x^2 + y^2"), "region")  # {g < 0} empty
    with pytest.raises(ValueError):
        plane_set(P("3"), "curve")


def test_plane_set_kind_validation():
    with pytest.raises(ValueError):
        plane_set(P("y"), "open")


def test_plane_set_accepts_smooth_examples():
    assert DISK().kind == "region"
    assert CIRC().allowed_signs == (0,)
    assert HALF().allowed_signs == (-1, 0)
    # smooth even though the gradient system is infinite before splitting
    # off the shared factor: two concentric circles
    ring = plane_set(P("(x^2 + y^2 - 1)*(x^2 + y^2 - 4)"), "curve")
    assert chi_set(ring) == 0


def test_chi_of_the_four_sets():
    assert chi_set(DISK()) == 1
    assert chi_set(CIRC()) == 0
    assert chi_set(HALF()) == 1
    assert chi_set(PARA()) == 1
    assert link_set(DISK()) == 0
    assert link_set(HALF()) == 1
    assert link_set(PARA()) == 1


# ---- stratified critical points ----------------------------------------------


def test_disk_height_function():
    pts = stratified_critical_points(DISK(), P("x"))
    assert len(pts) == 2
    by_sign = {p.lambda_sign: p for p in pts}
    assert by_sign[1].index == 0
    assert by_sign[-1].index == 1
    assert all(p.stratum == "boundary" for p in pts)
    # lambda > 0 at (1, 0), ascending exit; lambda < 0 at (-1, 0), a minimum
    assert by_sign[1].point.x.compare_rat(0) > 0
    assert by_sign[-1].point.x.compare_rat(0) < 0
    assert stratified_index(DISK(), P("x"), by_sign[1]) == 0


def test_circle_height_function():
    pts = stratified_critical_points(CIRC(), P("y"))
    assert sorted(p.index for p in pts) == [-1, 1]
    for p in pts:
        assert p.lambda_sign is None
        # minimum of y at the bottom, maximum at the top
        expected = 1 if p.point.y.compare_rat(0) < 0 else -1
        assert p.index == expected


def test_radial_function_has_infinite_boundary_locus():
    with pytest.raises(InfiniteZeroSetError):
        stratified_critical_points(DISK(), P("x^2 + y^2"))


def test_interior_and_boundary_mix():
    # one interior minimum plus four outward-gradient boundary tangencies
    f = P("x^2 + 1/2*y^2")
    pts = stratified_critical_points(DISK(), f)
    strata = sorted(p.stratum for p in pts)
    assert strata == ["boundary"] * 4 + ["interior"]
    assert sum(p.index for p in pts) == 1
    neg = stratified_critical_points(DISK(), -f)
    assert sum(p.index for p in neg) == 1
    # compact set: the two index totals add up to twice the Euler
    # characteristic
    assert sum(p.index for p in pts) + sum(p.index for p in neg) \
        == 2 * chi_set(DISK())


def test_parabola_region_direction_indices():
    # the region lies below the parabola, so grad g points out of it at the
    # origin and y increases outward; -y restricts to a maximum on the curve
    up = stratified_critical_points(PARA(), P("y"))
    assert [(p.stratum, p.lambda_sign, p.index) for p in up] \
        == [("boundary", 1, 0)]
    down = stratified_critical_points(PARA(), P("-y"))
    assert [(p.stratum, p.lambda_sign, p.index) for p in down] \
        == [("boundary", -1, -1)]


# ---- directions ---------------------------------------------------------------


def test_direction_construction():
    e1 = Direction.from_t(0)
    assert e1.v == (1, 0)
    assert Direction.from_t(1).v == (0, 1)
    assert Direction.from_t(None).v == (-1, 0)
    assert Direction.from_t(None).t_value() is None
    with pytest.raises(ValueError):
        Direction((Fraction(1), Fraction(1)))
    assert str(e1.linear()) == "x"
    assert e1.antipode().v == (-1, 0)


@given(st.fractions(max_denominator=60))
def test_direction_half_angle_roundtrip(t):
    d = Direction.from_t(t)
    v1, v2 = d.v
    assert v1 * v1 + v2 * v2 == 1
    assert d.t_value() == t
    anti = d.antipode()
    if t == 0:
        assert anti.t_value() is None
    else:
        assert anti.t_value() == -1 / t


def test_bad_directions_of_the_four_sets():
    assert bad_directions(DISK()) == ()
    assert bad_directions(CIRC()) == ()
    half = [b.t for b in bad_directions(HALF())]
    assert [t.as_rational() for t in half] == [-1, 1]
    para = bad_directions(PARA())
    assert len(para) == 2
    assert para[0].t.as_rational() == 0
    assert para[-1].t is None  # antipode of the vertical direction


def test_bad_directions_antipode_closed():
    # tilted half plane: the normal (3/5, 4/5) has half angle t = 1/2, its
    # antipode t = -2
    tilted = plane_set(P("3*x + 4*y"), "region")
    ts = [b.t.as_rational() for b in bad_directions(tilted)]
    assert ts == [-2, Fraction(1, 2)]


# ---- linear Morse summaries ----------------------------------------------------


def test_disk_summary_fields():
    s = linear_morse_summary(DISK(), Direction.from_t(0), 0)
    assert s.sum_index_above == 0
    assert s.sum_neg_index_below == 0
    assert (s.chi_x, s.chi_le, s.chi_eq, s.chi_ge) == (1, 1, 1, 1)
    assert s.total_index == 1
    assert s.total_neg_index == 1
    assert (s.link_x, s.link_le, s.link_eq, s.link_ge) == (0, 0, 0, 0)
    assert len(s.points) == 2
    assert sorted(s.neg_indices) == [0, 1]


def test_half_plane_summary():
    s = linear_morse_summary(HALF(), Direction.from_t(Fraction(1, 2)), 0)
    # no critical points at all: the sublevel link equals chi of the set
    assert s.points == ()
    assert s.total_index == 0
    assert s.link_le == chi_set(HALF()) == 1
    assert s.chi_le == 1 and s.chi_ge == 1 and s.chi_eq == 1


def test_circle_summary_above_alpha():
    s = linear_morse_summary(CIRC(), Direction((Fraction(0), Fraction(1))), 0)
    assert s.sum_index_above == -1
    assert s.chi_ge - s.chi_eq == -1
    assert (s.chi_le, s.chi_eq, s.chi_ge) == (1, 2, 1)
    assert s.link_eq == 2 * s.chi_x - s.link_x - s.total_index \
        - s.total_neg_index


def test_summary_rejects_bad_directions():
    with pytest.raises(BadDirectionError):
        linear_morse_summary(HALF(), Direction.from_t(1), 0)
    with pytest.raises(BadDirectionError):
        linear_morse_summary(HALF(), Direction.from_t(-1), 0)
    with pytest.raises(BadDirectionError):
        linear_morse_summary(PARA(), Direction.from_t(0), 0)
    with pytest.raises(BadDirectionError):
        linear_morse_summary(PARA(), Direction.from_t(None), Fraction(1, 3))


def test_summaries_across_directions_and_levels():
    # every construction re-checks all six Morse relations internally
    for X in (DISK(), CIRC(), HALF(), PARA()):
        for t in (Fraction(1, 3), Fraction(-2, 5), 3):
            for alpha in (Fraction(-1), 0, Fraction(2, 3)):
                s = linear_morse_summary(X, Direction.from_t(t), alpha)
                assert s.chi_eq == s.chi_x - s.sum_index_above \
                    - s.sum_neg_index_below


# ---- arcs and the Gauss-Bonnet measure -----------------------------------------


def test_direction_arcs_cover_the_circle():
    import math

    arcs = direction_arcs(PARA())
    assert len(arcs) == 2
    total_lo = sum(a.measure[0] for a in arcs)
    total_hi = sum(a.measure[1] for a in arcs)
    assert float(total_lo) == pytest.approx(2 * math.pi)
    assert float(total_hi) == pytest.approx(2 * math.pi)
    assert total_hi - total_lo < Fraction(1, 10 ** 9)


def test_index_sum_constant_per_arc():
    def iota(X, t):
        v = Direction.from_t(t)
        return sum(p.index for p in stratified_critical_points(X, v.linear()))

    # parabola region: arcs are the upper and lower half circles
    assert iota(PARA(), Fraction(1, 2)) == iota(PARA(), 2) == 0
    assert iota(PARA(), Fraction(-1, 2)) == iota(PARA(), -2) == -1
    # half plane: arcs between t = -1 and t = 1
    assert iota(HALF(), 0) == iota(HALF(), Fraction(1, 2)) == 0
    assert iota(HALF(), 2) == iota(HALF(), -2) == 0


def test_gauss_bonnet_exact():
    v, err = gauss_bonnet(DISK(), "exact")
    assert (v, err) == (1, 0)
    v, err = gauss_bonnet(CIRC(), "exact")
    assert (v, err) == (0, 0)
    v, err = gauss_bonnet(HALF(), "exact")
    assert v == 0 and err == 0
    v, err = gauss_bonnet(PARA(), "exact")
    assert err <= Fraction(1, 10 ** 6)
    assert abs(v + Fraction(1, 2)) <= err


def test_gauss_bonnet_exact_tolerance():
    v, err = gauss_bonnet(PARA(), "exact", tol=Fraction(1, 10 ** 12))
    assert err <= Fraction(1, 10 ** 12)
    assert abs(v + Fraction(1, 2)) <= err


def test_gauss_bonnet_sampled():
    assert gauss_bonnet(DISK(), "sampled", n=64) == (1, 0)
    v, err = gauss_bonnet(PARA(), "sampled", n=64)
    assert v == Fraction(-1, 2)
    assert err <= Fraction(1, 100)
    v, err = gauss_bonnet(HALF(), "sampled", n=32)
    assert abs(v) <= err
    with pytest.raises(ValueError):
        gauss_bonnet(DISK(), "sampled", n=0)
    with pytest.raises(ValueError):
        gauss_bonnet(DISK(), "nearest")


def test_gauss_bonnet_closed_forms():
    # for closed sets the measure equals chi(X) - chi(Lk X)/2 minus the
    # direction average of chi(Lk(X cut to the zero level)) / 2; check
    # against the four known values
    expected = {
        "x^2 + y^2 - 1:region": Fraction(1),
        "x^2 + y^2 - 1:curve": Fraction(0),
        "y:region": Fraction(0),
        "y - x^2:region": Fraction(-1, 2),
    }
    for key, want in expected.items():
        g, kind = key.split(":")
        X = plane_set(P(g), kind)
        v, err = gauss_bonnet(X, "exact")
        assert abs(v - want) <= err


def test_gauss_bonnet_level_link_average():
    # the link of the zero level set, averaged over directions, closes the
    # gap between the measure and chi(X) - chi(Lk X)/2
    from satopo.rational import iv_add, iv_div, iv_scale
    from satopo.strata import _pi_iv

    for X in (DISK(), CIRC(), HALF(), PARA()):
        arcs = direction_arcs(X)
        two_pi = iv_scale(_pi_iv(32), Fraction(2))
        acc = (Fraction(0), Fraction(0))
        for a in arcs:
            v = Direction.from_t(a.sample)
            lk = link_set(X, [(v.linear(X.g.vars), (0,))])
            acc = iv_add(acc, iv_scale(iv_div(a.measure, two_pi),
                                       Fraction(lk)))
        base = chi_set(X) - Fraction(link_set(X), 2)
        lo, hi = base - acc[1] / 2, base - acc[0] / 2
        v, err = gauss_bonnet(X, "exact")
        assert lo - err <= v <= hi + err
