from fractions import Fraction

import pytest

from satopo.algnum import AlgNumber
from satopo.parsing import parse_poly
from satopo.solve2 import (InfiniteZeroSetError, boundary_degree, common_zeros,
                           sign_at, value_at)
from satopo.upoly import UPoly


def approx_points(points):
    return sorted((float(p.x), float(p.y)) for p in points)


def close(a, b, tol=1e-6):
    return all(abs(u - v) < tol for u, v in zip(a, b))


def test_two_transverse_lines():
    pts = common_zeros(parse_poly("x + y - 1"), parse_poly("x - y"))
    assert len(pts) == 1
    assert pts[0].x.as_rational() == Fraction(1, 2)
    assert pts[0].y.as_rational() == Fraction(1, 2)


def test_circle_and_line():
    pts = common_zeros(parse_poly("x^2 + y^2 - 2"), parse_poly("x - y"))
    got = approx_points(pts)
    assert len(got) == 2
    assert close(got[0], (-1.0, -1.0))
    assert close(got[1], (1.0, 1.0))


def test_tangential_intersection():
    # parabola tangent to the x-axis: single solution at origin, degenerate
    pts = common_zeros(parse_poly("y - x^2"), parse_poly("y"))
    assert approx_points(pts) == [(0.0, 0.0)]


def test_monkey_saddle_gradient():
    # gradient of x^3 - 3xy^2: (3x^2 - 3y^2, -6xy); only common zero is 0
    pts = common_zeros(parse_poly("3*x^2 - 3*y^2"), parse_poly("-6*x*y"))
    assert approx_points(pts) == [(0.0, 0.0)]


def test_degenerate_zero_with_no_sign_change():
    # f = x^3 + y^2 has gradient (3x^2, 2y): zero only at origin, and the
    # boundary degree there is 0, forcing the exact-zero layer
    pts = common_zeros(parse_poly("3*x^2"), parse_poly("2*y"))
    assert approx_points(pts) == [(0.0, 0.0)]


def test_no_real_solutions():
    pts = common_zeros(parse_poly("x^2 + y^2 + 1"), parse_poly("x - y"))
    assert pts == []


def test_shared_factor_raises():
    with pytest.raises(InfiniteZeroSetError):
        common_zeros(parse_poly("(x - y)*(x + 1)"), parse_poly("(x - y)*(y - 2)"))


def test_irrational_solutions():
    # y = x^2 and x^2 + y^2 = 1 intersect at x = +-sqrt(golden-ratio-ish)
    pts = common_zeros(parse_poly("y - x^2"), parse_poly("x^2 + y^2 - 1"))
    got = approx_points(pts)
    assert len(got) == 2
    y_expected = 0.6180339887498949  # (sqrt(5) - 1) / 2
    for gx, gy in got:
        assert abs(gy - y_expected) < 1e-6
        assert abs(gx * gx - y_expected) < 1e-6


def test_grid_with_multiple_candidates():
    # four transverse intersections of a circle pair
    p = parse_poly("x^2 + y^2 - 4")
    q = parse_poly("x*y - 1")
    pts = common_zeros(p, q)
    assert len(pts) == 4
    for pt in pts:
        assert sign_at(p, pt.x, pt.y) == 0
        assert sign_at(q, pt.x, pt.y) == 0


def test_sign_at_nonzero():
    pts = common_zeros(parse_poly("y - x^2"), parse_poly("x^2 + y^2 - 1"))
    g = parse_poly("x + y + 5")
    for pt in pts:
        assert sign_at(g, pt.x, pt.y) == 1


def test_value_at_symmetric_function():
    # at the intersections of y = x^2 with the unit circle, y is the golden
    # ratio conjugate; x^2 + y^2 evaluates to exactly 1
    pts = common_zeros(parse_poly("y - x^2"), parse_poly("x^2 + y^2 - 1"))
    for pt in pts:
        v = value_at(parse_poly("x^2 + y^2"), pt.x, pt.y)
        assert v.is_rational() and v.as_rational() == 1


def test_value_at_genuinely_algebraic():
    pts = common_zeros(parse_poly("x^2 - 2"), parse_poly("y - x"))
    vals = [value_at(parse_poly("x + y"), pt.x, pt.y) for pt in pts]
    floats = sorted(float(v) for v in vals)
    assert abs(floats[0] + 2.8284271247461903) < 1e-6
    assert abs(floats[1] - 2.8284271247461903) < 1e-6


def test_boundary_degree_simple_zero():
    p = parse_poly("x")
    q = parse_poly("y")
    deg = boundary_degree(p, q, (Fraction(-1), Fraction(1)),
                          (Fraction(-1), Fraction(1)))
    assert deg == 1
    deg_flip = boundary_degree(p, -q, (Fraction(-1), Fraction(1)),
                               (Fraction(-1), Fraction(1)))
    assert deg_flip == -1


def test_boundary_degree_empty_box():
    deg = boundary_degree(parse_poly("x - 10"), parse_poly("y - 10"),
                          (Fraction(-1), Fraction(1)),
                          (Fraction(-1), Fraction(1)))
    assert deg == 0
