"""Real algebraic numbers as (irreducible polynomial, isolating interval).

An AlgNumber is either rational (degree-1 minimal polynomial, point interval)
or irrational, in which case the interval is open with non-root endpoints and
contains exactly one root of the minimal polynomial.  Intervals shrink in
place as comparisons demand; narrowing never changes the number represented,
so the mutation is semantically invisible.

Comparisons, sign evaluations, and equality tests are exact: equality of two
numbers with the same minimal polynomial is decided by counting roots in the
intersection of their isolating intervals, and every sign query terminates
because a polynomial that is not a multiple of the minimal polynomial cannot
vanish at the number.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from . import sym
from .rational import Interval, Rat, RatLike, iv_width, rat, sign
from .upoly import UPoly

Value = Union[Fraction, "AlgNumber"]


class AlgNumber:
    __slots__ = ("minpoly", "_lo", "_hi")

    def __init__(self, minpoly: UPoly, lo: Fraction, hi: Fraction):
        if minpoly.degree == 1:
            # canonical form: rational numbers always carry point intervals
            r = -minpoly.coeff(0) / minpoly.coeff(1)
            lo = hi = r
        self.minpoly = minpoly
        self._lo = lo
        self._hi = hi

    # ---- constructors -------------------------------------------------------

    @staticmethod
    def from_rat(r: RatLike) -> "AlgNumber":
        v = rat(r)
        mp = UPoly.from_coeffs([-v, 1]).primitive()
        if mp.lc < 0:
            mp = -mp
        return AlgNumber(mp, v, v)

    @staticmethod
    def from_root(p: UPoly, interval: Interval,
                  factors: Sequence[UPoly] | None = None) -> "AlgNumber":
        """The unique root of p in the interval.

        ``interval`` is a point (an exact rational root) or an open interval
        with non-root endpoints containing exactly one distinct root of p.
        The minimal polynomial is located among the irreducible factors of p
        (pass ``factors`` to reuse a factorization).
        """
        if p.is_zero():
            raise ValueError("zero polynomial")
        lo, hi = interval
        if lo == hi:
            if p(lo) != 0:
                raise ValueError(f"{lo} is not a root")
            return AlgNumber.from_rat(lo)
        if p(lo) == 0 or p(hi) == 0:
            raise ValueError("interval endpoint is a root")
        if factors is None:
            factors = [base for base, _ in sym.factor_upoly(p)]
        hits = []
        for base in factors:
            if base.degree == 1:
                r = -base.coeff(0) / base.coeff(1)
                if lo < r < hi:
                    hits.append((base, (r, r)))
            elif base(lo) != 0 and base(hi) != 0 \
                    and base.count_roots_half_open(lo, hi) > 0:
                hits.append((base, (lo, hi)))
            elif base(lo) == 0 or base(hi) == 0:
                # an endpoint root of p would have been caught above
                raise ValueError("interval endpoint is a root of a factor")
        if len(hits) != 1:
            raise ValueError("interval does not isolate a single root")
        base, (blo, bhi) = hits[0]
        if blo == bhi:
            return AlgNumber.from_rat(blo)
        if base.count_roots_half_open(blo, bhi) != 1:
            raise ValueError("interval does not isolate a single root")
        mp = base.primitive()
        if mp.lc < 0:
            mp = -mp
        return AlgNumber(mp, blo, bhi)

    @staticmethod
    def roots_of(p: UPoly) -> List["AlgNumber"]:
        """All real roots of p, sorted increasingly."""
        if p.is_zero():
            raise ValueError("zero polynomial")
        out: List[AlgNumber] = []
        for base, _ in sym.factor_upoly(p):
            mp = base.primitive()
            if mp.lc < 0:
                mp = -mp
            for lo, hi in mp.isolate_roots():
                if lo == hi:
                    out.append(AlgNumber.from_rat(lo))
                else:
                    out.append(AlgNumber(mp, lo, hi))
        out.sort()
        return out

    # ---- basic queries -------------------------------------------------------

    @property
    def interval(self) -> Interval:
        return (self._lo, self._hi)

    def is_rational(self) -> bool:
        return self._lo == self._hi

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational value")
        return self._lo

    def degree(self) -> int:
        return self.minpoly.degree

    def __float__(self) -> float:
        self.refine_to(Fraction(1, 2 ** 40))
        return float((self._lo + self._hi) / 2)

    def __repr__(self) -> str:
        if self.is_rational():
            v = self._lo
            return str(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return (f"AlgNumber({self.minpoly} = 0 in "
                f"({self._lo}, {self._hi}) ~ {float(self):.6g})")

    # ---- refinement ------------------------------------------------------------

    def refine_to(self, width: RatLike) -> "AlgNumber":
        w = rat(width)
        if self._hi - self._lo > w:
            lo, hi = self.minpoly.refine_root((self._lo, self._hi), w)
            self._lo, self._hi = lo, hi
        return self

    def refine_step(self) -> "AlgNumber":
        if not self.is_rational():
            self.refine_to((self._hi - self._lo) / 2)
        return self

    # ---- exact sign / comparison machinery ---------------------------------------

    def sign_of(self, q: UPoly) -> int:
        """Exact sign of q evaluated at this number."""
        if q.is_zero():
            return 0
        if self.is_rational():
            return q.sign_at(self._lo)
        if q.var != self.minpoly.var:
            q = UPoly(q.coeffs, self.minpoly.var)
        if (q % self.minpoly).is_zero():
            return 0
        while True:
            enc = q.eval_interval(self.interval)
            if enc[0] > 0:
                return 1
            if enc[1] < 0:
                return -1
            self.refine_step()

    def value_interval(self, q: UPoly, width: RatLike) -> Interval:
        """Enclosure of q(self) narrower than ``width``."""
        w = rat(width)
        if self.is_rational():
            v = q(self._lo)
            return (v, v)
        while True:
            enc = q.eval_interval(self.interval)
            if iv_width(enc) <= w:
                return enc
            self.refine_step()

    def compare_rat(self, r: RatLike) -> int:
        v = rat(r)
        if self.is_rational():
            return sign(self._lo - v)
        if self.minpoly(v) == 0:
            # v would be a rational root of an irreducible non-linear poly
            raise AssertionError("irreducible minpoly with rational root")
        while True:
            if v <= self._lo:
                return 1
            if v >= self._hi:
                return -1
            self.refine_step()

    def compare(self, other: "Value") -> int:
        if not isinstance(other, AlgNumber):
            return self.compare_rat(rat(other))
        if other.is_rational():
            return self.compare_rat(other._lo)
        if self.is_rational():
            return -other.compare_rat(self._lo)
        same = self.minpoly.coeffs == other.minpoly.coeffs
        while True:
            if self._hi <= other._lo:
                return -1
            if other._hi <= self._lo:
                return 1
            if same:
                a = max(self._lo, other._lo)
                b = min(self._hi, other._hi)
                if a < b and self.minpoly.count_roots_half_open(a, b) > 0:
                    return 0
            self.refine_step()
            other.refine_step()

    # ---- rich comparisons (semantic, exact) -------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AlgNumber):
            return self.compare(other) == 0
        if isinstance(other, (int, Fraction)):
            return self.compare_rat(other) == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.minpoly.coeffs)

    def __lt__(self, other: Value) -> bool:
        return self.compare(other) < 0

    def __le__(self, other: Value) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: Value) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: Value) -> bool:
        return self.compare(other) >= 0


# ---- helpers over mixed Rat / AlgNumber values --------------------------------

def as_algnum(v: Value | RatLike) -> AlgNumber:
    if isinstance(v, AlgNumber):
        return v
    return AlgNumber.from_rat(rat(v))


def cmp_values(a: Value | RatLike, b: Value | RatLike) -> int:
    if isinstance(a, AlgNumber):
        return a.compare(b if isinstance(b, AlgNumber) else rat(b))
    if isinstance(b, AlgNumber):
        return -b.compare_rat(rat(a))
    return sign(rat(a) - rat(b))


def sort_values(values: Iterable[Value]) -> List[Value]:
    import functools
    return sorted(values, key=functools.cmp_to_key(cmp_values))


def dedup_sorted(values: Sequence[Value]) -> List[Value]:
    out: List[Value] = []
    for v in values:
        if not out or cmp_values(out[-1], v) != 0:
            out.append(v)
    return out


def merge_values(*lists: Iterable[Value]) -> List[Value]:
    pool: List[Value] = []
    for lst in lists:
        pool.extend(lst)
    return dedup_sorted(sort_values(pool))


def separation(a: Value | RatLike, b: Value | RatLike) -> Fraction:
    """Positive rational lower bound on |a - b| for provably distinct values."""
    av, bv = as_algnum(a), as_algnum(b)
    if cmp_values(av, bv) == 0:
        raise ValueError("values coincide, no positive separation")
    while True:
        alo, ahi = av.interval
        blo, bhi = bv.interval
        if ahi < blo:
            return blo - ahi
        if bhi < alo:
            return alo - bhi
        av.refine_step()
        bv.refine_step()


def disjoint_enclosures(values: Sequence[AlgNumber]) -> None:
    """Refine a strictly increasing list until the intervals are disjoint."""
    changed = True
    while changed:
        changed = False
        for a, b in zip(values, values[1:]):
            if a.interval[1] >= b.interval[0]:
                a.refine_step()
                b.refine_step()
                changed = True


def separating_rationals(values: Sequence[Value]) -> List[Fraction]:
    """Rationals s_0 < v_1 < s_1 < ... < v_k < s_k around sorted values.

    Returns k+1 rationals strictly interleaving the given strictly increasing
    values (one below all, one between each adjacent pair, one above all).
    For an empty input returns [0].
    """
    vals = [as_algnum(v) for v in values]
    if not vals:
        return [Fraction(0)]
    disjoint_enclosures(vals)
    # with disjoint enclosures (strict: hi_a < lo_b) every midpoint of the
    # gap [hi_a, lo_b] lies strictly between the two numbers, and the outer
    # candidates clear the extreme values by at least 1
    out = [vals[0].interval[0] - 1]
    for a, b in zip(vals, vals[1:]):
        out.append((a.interval[1] + b.interval[0]) / 2)
    out.append(vals[-1].interval[1] + 1)
    return out
