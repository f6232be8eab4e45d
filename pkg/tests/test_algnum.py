from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satopo.algnum import (AlgNumber, cmp_values, dedup_sorted, merge_values,
                           separating_rationals, sort_values)
from satopo.upoly import UPoly, poly_from_roots

SQRT2_POLY = UPoly.from_coeffs([-2, 0, 1])
GOLDEN_POLY = UPoly.from_coeffs([-1, -1, 1])  # roots (1±sqrt 5)/2


def sqrt2() -> AlgNumber:
    return AlgNumber.from_root(SQRT2_POLY, (Fraction(1), Fraction(2)))


def test_rational_roundtrip():
    a = AlgNumber.from_rat(Fraction(3, 7))
    assert a.is_rational()
    assert a.as_rational() == Fraction(3, 7)
    assert a.compare_rat(Fraction(3, 7)) == 0
    assert a.compare_rat(Fraction(1, 2)) < 0


def test_from_root_picks_minimal_factor():
    # (x^2 - 2)(x - 1): the root in (1.2, 1.6) is sqrt(2)
    p = SQRT2_POLY * UPoly.from_coeffs([-1, 1])
    a = AlgNumber.from_root(p, (Fraction(6, 5), Fraction(8, 5)))
    assert a.minpoly.degree == 2
    assert not a.is_rational()


def test_from_root_rejects_non_isolating():
    p = poly_from_roots([1, 2])
    with pytest.raises(ValueError):
        AlgNumber.from_root(p, (Fraction(0), Fraction(3)))


def test_sign_of():
    a = sqrt2()
    assert a.sign_of(UPoly.from_coeffs([-2, 0, 1])) == 0       # its minpoly
    assert a.sign_of(UPoly.from_coeffs([-1, 1])) == 1          # x - 1 > 0
    assert a.sign_of(UPoly.from_coeffs([2, -1])) == 1          # 2 - x > 0
    assert a.sign_of(UPoly.from_coeffs([-3, 0, 1])) == -1      # x^2 - 3 < 0


def test_compare_same_minpoly_distinct_roots():
    pos = AlgNumber.from_root(SQRT2_POLY, (Fraction(0), Fraction(2)))
    neg = AlgNumber.from_root(SQRT2_POLY, (Fraction(-2), Fraction(0)))
    assert neg < pos
    assert pos.compare(neg) == 1


def test_equality_across_representations():
    a = sqrt2()
    b = AlgNumber.from_root(SQRT2_POLY * UPoly.from_coeffs([5, 1]),
                            (Fraction(7, 5), Fraction(3, 2)))
    assert a == b
    assert a.compare(b) == 0
    assert hash(a) == hash(b)


def test_compare_against_rationals():
    a = sqrt2()
    assert a > Fraction(7, 5)
    assert a < Fraction(3, 2)
    assert cmp_values(Fraction(1), a) == -1
    assert cmp_values(a, a) == 0


def test_roots_of_sorted():
    p = SQRT2_POLY * GOLDEN_POLY * UPoly.from_coeffs([0, 1])
    roots = AlgNumber.roots_of(p)
    floats = [float(r) for r in roots]
    assert floats == sorted(floats)
    assert len(roots) == 5
    assert any(r.is_rational() and r.as_rational() == 0 for r in roots)


def test_value_interval_narrows():
    a = sqrt2()
    q = UPoly.from_coeffs([0, 0, 3])  # 3x^2 -> exactly 6 at sqrt2
    lo, hi = a.value_interval(q, Fraction(1, 1000))
    assert hi - lo <= Fraction(1, 1000)
    assert lo <= 6 <= hi


def test_sort_and_dedup_mixed():
    vals = [Fraction(2), sqrt2(), Fraction(1), sqrt2(), Fraction(3, 2)]
    merged = merge_values(vals)
    floats = [float(v) if isinstance(v, AlgNumber) else float(v) for v in merged]
    assert floats == sorted(floats)
    assert len(merged) == 4  # the duplicate sqrt2 collapses


def test_separating_rationals():
    golden = AlgNumber.from_root(GOLDEN_POLY, (Fraction(1), Fraction(2)))
    vals = sort_values([golden, sqrt2(), Fraction(0)])
    vals = dedup_sorted(vals)
    seps = separating_rationals(vals)
    assert len(seps) == len(vals) + 1
    for i, v in enumerate(vals):
        assert cmp_values(seps[i], v) == -1
        assert cmp_values(v, seps[i + 1]) == -1


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=8),
                min_size=1, max_size=6))
@settings(max_examples=40)
def test_separators_on_rational_lists(vals):
    distinct = dedup_sorted(sort_values([AlgNumber.from_rat(v) for v in set(vals)]))
    seps = separating_rationals(distinct)
    for i, v in enumerate(distinct):
        assert seps[i] < v.as_rational() < seps[i + 1]
