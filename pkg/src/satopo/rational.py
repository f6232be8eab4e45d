"""Exact rational scalars and closed-interval arithmetic.

Every certified computation in this package runs over ``fractions.Fraction``.
Intervals are plain ``(lo, hi)`` tuples of Fractions with ``lo <= hi`` and are
used both for root enclosures and for range bounds of polynomial evaluation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Tuple, Union

Rat = Fraction
RatLike = Union[Fraction, int, str]
Interval = Tuple[Fraction, Fraction]


def rat(value: RatLike) -> Fraction:
    """Coerce an int, Fraction, or ``p/q`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"not an exact rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (optional sign, integer parts only)."""
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(value: Fraction) -> str:
    """Render a Fraction as ``p`` or ``p/q`` (the wire format for reports)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def sign(value: Fraction) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


# ----------------------------------------------------------------------------
# closed-interval arithmetic (exact, no rounding)
# ----------------------------------------------------------------------------

def iv(lo: RatLike, hi: RatLike) -> Interval:
    a, b = rat(lo), rat(hi)
    if a > b:
        raise ValueError(f"empty interval [{a}, {b}]")
    return (a, b)


def iv_point(value: RatLike) -> Interval:
    v = rat(value)
    return (v, v)


def iv_add(a: Interval, b: Interval) -> Interval:
    return (a[0] + b[0], a[1] + b[1])


def iv_sub(a: Interval, b: Interval) -> Interval:
    return (a[0] - b[1], a[1] - b[0])


def iv_neg(a: Interval) -> Interval:
    return (-a[1], -a[0])


def iv_mul(a: Interval, b: Interval) -> Interval:
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(products), max(products))


def iv_scale(a: Interval, c: Fraction) -> Interval:
    if c >= 0:
        return (a[0] * c, a[1] * c)
    return (a[1] * c, a[0] * c)


def iv_div(a: Interval, b: Interval) -> Interval:
    """a / b for an interval b strictly positive."""
    if b[0] <= 0:
        raise ValueError("interval division requires a positive denominator")
    quotients = (a[0] / b[0], a[0] / b[1], a[1] / b[0], a[1] / b[1])
    return (min(quotients), max(quotients))


def iv_sq(a: Interval) -> Interval:
    """Tight enclosure of {t^2 : t in a} (iv_mul(a, a) overshoots across 0)."""
    lo2, hi2 = a[0] * a[0], a[1] * a[1]
    if a[0] <= 0 <= a[1]:
        return (Fraction(0), max(lo2, hi2))
    return (min(lo2, hi2), max(lo2, hi2))


def iv_pow(a: Interval, n: int) -> Interval:
    if n == 0:
        return (Fraction(1), Fraction(1))
    out = a
    for _ in range(n - 1):
        out = iv_mul(out, a)
    return out


def iv_contains_zero(a: Interval) -> bool:
    return a[0] <= 0 <= a[1]


def iv_sign(a: Interval) -> int | None:
    """Definite sign of every point of the interval, or None if mixed."""
    if a[0] > 0:
        return 1
    if a[1] < 0:
        return -1
    if a[0] == 0 and a[1] == 0:
        return 0
    return None


def iv_width(a: Interval) -> Fraction:
    return a[1] - a[0]


def iv_mid(a: Interval) -> Fraction:
    return (a[0] + a[1]) / 2
