"""Critical point solving, local degrees, values, and the arc-count check."""

from fractions import Fraction

import pytest

from satopo.circle import degree_at_infinity
from satopo.critical import (InfiniteCriticalSetError, critical_values,
                             fiber_arc_index, find_critical_points, index)
from satopo.parsing import parse_poly


def P(text):
    return parse_poly(text)


def test_single_minimum():
    pts = find_critical_points(P("x^2 + y^2"))
    assert len(pts) == 1
    p = pts[0]
    (xlo, xhi), (ylo, yhi) = p.box
    assert xlo <= 0 <= xhi and ylo <= 0 <= yhi
    assert p.local_degree == 1
    assert p.value.is_rational() and p.value.as_rational() == 0
    assert index(P("x^2 + y^2"), p) == 1
    assert p.ind_f == p.ind_neg_f == 1


def test_two_critical_points_with_hand_values():
    f = P("x^3 - 3*x + y^2")
    pts = find_critical_points(f)
    assert len(pts) == 2
    by_sign = {}
    for p in pts:
        (xlo, xhi), _ = p.box
        by_sign[1 if (xlo + xhi) / 2 > 0 else -1] = p
    # f(1, 0) = -2 and f(-1, 0) = 2
    assert by_sign[1].value.as_rational() == -2
    assert by_sign[-1].value.as_rational() == 2
    assert by_sign[1].local_degree == 1
    assert by_sign[-1].local_degree == -1


def test_gradient_never_vanishes():
    assert find_critical_points(P("x^2*y - x")) == []
    assert critical_values(P("x^2*y - x")) == []
    assert find_critical_points(P("x + y^2")) == []


def test_critical_values_sorted_and_deduped():
    vals = critical_values(P("x^3 - 3*x + y^2"))
    assert [v.as_rational() for v in vals] == [-2, 2]
    assert [v.as_rational() for v in critical_values(P("x^2 + y^2"))] == [0]
    # two minima share the value 0, the saddle between them sits at 1
    vals = critical_values(P("(x^2 - 1)^2 + y^2"))
    assert [v.as_rational() for v in vals] == [0, 1]


def test_infinite_critical_set_errors():
    with pytest.raises(InfiniteCriticalSetError):
        find_critical_points(P("x^2*y^2"))
    with pytest.raises(InfiniteCriticalSetError):
        find_critical_points(P("x^2"))
    with pytest.raises(InfiniteCriticalSetError):
        find_critical_points(P("7"))


def test_planted_grid_of_nine():
    f = P("(x^2 - 1)^2 + (y^2 - 4)^2")
    pts = find_critical_points(f)
    assert len(pts) == 9
    found = set()
    degrees = {}
    for p in pts:
        (xlo, xhi), (ylo, yhi) = p.box
        for cx in (-1, 0, 1):
            for cy in (-2, 0, 2):
                if xlo <= cx <= xhi and ylo <= cy <= yhi:
                    found.add((cx, cy))
                    degrees[(cx, cy)] = p.local_degree
    assert len(found) == 9
    # four minima at the corners, one maximum in the middle, four saddles
    for cx in (-1, 1):
        for cy in (-2, 2):
            assert degrees[(cx, cy)] == 1
    assert degrees[(0, 0)] == 1
    for k in [(0, -2), (0, 2), (-1, 0), (1, 0)]:
        assert degrees[k] == -1
    assert sum(degrees.values()) == degree_at_infinity(f) == 1


def test_irrational_critical_data():
    f = P("x^4 - x + y^2")
    pts = find_critical_points(f)
    assert len(pts) == 1
    p = pts[0]
    assert not p.value.is_rational()
    x0 = 0.25 ** (1 / 3)
    assert float(p.value) == pytest.approx(x0 ** 4 - x0, abs=1e-9)
    assert p.local_degree == 1
    assert fiber_arc_index(f, p, -1) == 1
    assert fiber_arc_index(f, p, +1) == 1


def test_arc_count_matches_degree_on_model_germs():
    for text, want in [("x^2 + y^2", 1), ("x^2 - y^2", -1),
                       ("x^3 - 3*x*y^2", -2), ("0 - x^2 - y^2", 1)]:
        pts = find_critical_points(P(text))
        assert len(pts) == 1
        p = pts[0]
        assert p.local_degree == want, text
        assert fiber_arc_index(P(text), p, -1) == want, text
        assert fiber_arc_index(P(text), p, +1) == want, text


def test_arc_count_away_from_origin():
    f = P("x^3 - 3*x + y^2")
    for p in find_critical_points(f):
        assert fiber_arc_index(f, p, -1) == p.local_degree
        assert fiber_arc_index(f, p, +1) == p.local_degree
