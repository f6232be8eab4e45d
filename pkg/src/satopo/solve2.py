"""Certified solving of bivariate polynomial systems with finite zero sets.

``common_zeros(P, Q)`` returns every real solution of P = Q = 0 as a pair of
algebraic numbers, with a proof of existence and uniqueness per reported
point and a proof of exhaustiveness overall:

* exhaustiveness: any real solution has x among the real roots of
  Res_y(P, Q) and y among the real roots of Res_x(P, Q), so candidate
  boxes (products of isolating intervals) cover everything;
* uniqueness: each candidate box contains at most one solution because the
  coordinate intervals each isolate a single eliminant root;
* existence, decided per box by a ladder of certificates:
  (0) interval arithmetic excludes the box,
  (1) a simple Res_y root with both leading y-coefficients nonvanishing
      forces exactly one common point over that x, real by conjugation
      symmetry, pinned to one box by refinement,
  (2) a nonzero topological degree of (P, Q) around the box boundary forces
      a zero inside,
  (3) exact sign tests of P and Q at the algebraic point settle the
      remaining (degenerate) cases.

The exact sign test ``sign_at`` and exact value construction ``value_at``
are exported for reuse; they terminate on every input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import sym
from .algnum import AlgNumber, disjoint_enclosures
from .bpoly import BPoly
from .rational import Interval, iv_sign, sign
from .upoly import UPoly

MAX_CHEAP_REFINEMENTS = 6


class InfiniteZeroSetError(ValueError):
    """The system has a positive-dimensional (or everywhere-zero) solution set."""


@dataclass
class PlanePoint:
    """A certified common solution with algebraic coordinates."""

    x: AlgNumber
    y: AlgNumber

    def box(self) -> Tuple[Interval, Interval]:
        return (self.x.interval, self.y.interval)

    def refine_to(self, width) -> "PlanePoint":
        self.x.refine_to(width)
        self.y.refine_to(width)
        return self

    def is_rational(self) -> bool:
        return self.x.is_rational() and self.y.is_rational()

    def __repr__(self) -> str:
        return f"PlanePoint({self.x!r}, {self.y!r})"


# ----------------------------------------------------------------------------
# exact sign and value of a polynomial at an algebraic point
# ----------------------------------------------------------------------------

def _minpoly_pair(x: AlgNumber, y: AlgNumber,
                  vars: Tuple[str, str]) -> Tuple[UPoly, UPoly]:
    return UPoly(x.minpoly.coeffs, vars[0]), UPoly(y.minpoly.coeffs, vars[1])


def _sign_by_refinement(p: BPoly, x: AlgNumber, y: AlgNumber) -> int:
    """Refine until the box enclosure is sign-definite (value must be nonzero)."""
    while True:
        s = iv_sign(p.eval_box(x.interval, y.interval))
        if s is not None:
            return s
        x.refine_step()
        y.refine_step()


def sign_at(p: BPoly, x: AlgNumber, y: AlgNumber) -> int:
    """Exact sign of p at an algebraic point (certified, always terminates)."""
    if p.is_zero():
        return 0
    if x.is_rational():
        return y.sign_of(p.eval_1(x.as_rational()))
    if y.is_rational():
        return x.sign_of(p.eval_2(y.as_rational()))

    for _ in range(MAX_CHEAP_REFINEMENTS):
        s = iv_sign(p.eval_box(x.interval, y.interval))
        if s is not None:
            return s
        x.refine_step()
        y.refine_step()

    px, qy = _minpoly_pair(x, y, p.vars)
    # necessary condition for vanishing: Res_y(minpoly_y, p) vanishes at x
    c = sym.resultant_wrt(BPoly.from_upoly(qy, 1, p.vars), p, 2)
    if not c.is_zero() and x.sign_of(c) != 0:
        return _sign_by_refinement(p, x, y)

    # p(x, y) is a root of T; separate zero from T's other roots
    t = sym.value_min_poly(px, qy, p)
    if t.is_zero():
        raise AssertionError("value eliminant vanished identically")
    if t(Fraction(0)) != 0:
        return _sign_by_refinement(p, x, y)
    gap = t.root_separation_floor()
    while True:
        enc = p.eval_box(x.interval, y.interval)
        if -gap < enc[0] and enc[1] < gap:
            return 0
        s = iv_sign(enc)
        if s is not None:
            return s
        x.refine_step()
        y.refine_step()


def _locate_root(roots: List[AlgNumber], enclose) -> AlgNumber:
    """Pick the unique root whose interval the shrinking enclosure settles on.

    ``enclose()`` must return ever-narrower intervals around a value that is
    exactly one of the given roots.
    """
    while True:
        lo, hi = enclose()
        width = max(hi - lo, Fraction(1, 2 ** 20))
        hits = []
        for r in roots:
            rl, rh = r.refine_to(width).interval
            if not (rh < lo or hi < rl):
                hits.append(r)
        if len(hits) == 1:
            return hits[0]


def value_at(s: BPoly, x: AlgNumber, y: AlgNumber) -> AlgNumber:
    """The exact value s(x, y) as an algebraic number."""
    if x.is_rational() and y.is_rational():
        return AlgNumber.from_rat(s(x.as_rational(), y.as_rational()))
    if x.is_rational():
        return value_of_upoly_at(s.eval_1(x.as_rational()), y)
    if y.is_rational():
        return value_of_upoly_at(s.eval_2(y.as_rational()), x)
    px, qy = _minpoly_pair(x, y, s.vars)
    t = sym.value_min_poly(px, qy, s)
    if t.is_zero():
        raise AssertionError("value eliminant vanished identically")
    roots = AlgNumber.roots_of(t)

    def enclose() -> Interval:
        out = s.eval_box(x.interval, y.interval)
        x.refine_step()
        y.refine_step()
        return out

    return _locate_root(roots, enclose)


def value_of_upoly_at(u: UPoly, a: AlgNumber) -> AlgNumber:
    """u(a) as an algebraic number, for univariate u."""
    if a.is_rational():
        return AlgNumber.from_rat(u(a.as_rational()))
    if u.is_constant():
        return AlgNumber.from_rat(u.coeff(0))
    # embed as the bivariate value problem with a dummy second coordinate 0
    s = BPoly.from_upoly(UPoly(u.coeffs, "x"), 0, ("x", "y"))
    t = sym.value_min_poly(UPoly(a.minpoly.coeffs, "x"),
                           UPoly((Fraction(0), Fraction(1)), "y"), s)
    if t.is_zero():
        raise AssertionError("value eliminant vanished identically")
    roots = AlgNumber.roots_of(t)

    def enclose() -> Interval:
        out = u.eval_interval(a.interval)
        a.refine_step()
        return out

    return _locate_root(roots, enclose)


# ----------------------------------------------------------------------------
# rectangle boundary degree (layer 2 existence certificate)
# ----------------------------------------------------------------------------

class _EdgeDegenerate(Exception):
    """A corner hit a root or an edge lies inside a curve; shrink and retry."""


def _sign_beside(p: UPoly, a: AlgNumber, side: int) -> int:
    """Sign of p immediately beside a root a (+1: just above, -1: just below)."""
    sf = p.square_free_part()
    if a.is_rational():
        v = a.as_rational()
        step = Fraction(1, 2)
        while True:
            probe = v + side * step
            if sf(probe) != 0:
                inside = sf.count_roots_half_open(*sorted((v, probe)))
                # half-open (min, max]: going up it must contain no root at
                # all; going down it contains exactly the root a itself
                if inside == (0 if side > 0 else 1):
                    return sign(p(probe))
            step /= 2
    while True:
        lo, hi = a.interval
        if sf(lo) != 0 and sf(hi) != 0 \
                and sf.count_roots_half_open(lo, hi) == 1:
            return sign(p(hi if side > 0 else lo))
        a.refine_step()


def _edge_events(p: UPoly, lo: Fraction, hi: Fraction) -> List[AlgNumber]:
    """Roots of p strictly inside (lo, hi); degenerate edges raise."""
    if p.is_zero():
        raise _EdgeDegenerate()
    if p(lo) == 0 or p(hi) == 0:
        raise _EdgeDegenerate()
    sf = p.square_free_part()
    out = []
    for ivl in sf.isolate_roots():
        a = AlgNumber.from_root(sf, ivl)
        if a.compare_rat(lo) > 0 and a.compare_rat(hi) < 0:
            out.append(a)
    return out


def boundary_degree(p: BPoly, q: BPoly, bx: Interval,
                    by: Interval) -> Optional[int]:
    """Topological degree of (p, q) along the ccw rectangle boundary.

    Requires (p, q) nonzero everywhere on the boundary (the caller arranges
    this).  Returns None when a corner degenerates, so the caller can shrink
    the box and retry.  Convention: deg = -(1/2) * sum over p-sign-crossings
    of crossing_direction * sign(q), crossing direction +1 when p goes from
    negative to positive along the ccw traversal.
    """
    x0, x1 = bx
    y0, y1 = by
    total = 0
    try:
        edges = [
            (p.eval_2(y0), q.eval_2(y0), x0, x1, +1),
            (p.eval_1(x1), q.eval_1(x1), y0, y1, +1),
            (p.eval_2(y1), q.eval_2(y1), x0, x1, -1),
            (p.eval_1(x0), q.eval_1(x0), y0, y1, -1),
        ]
        for pe, qe, lo, hi, orient in edges:
            for ev in _edge_events(pe, lo, hi):
                s_after = _sign_beside(pe, ev, orient)
                s_before = _sign_beside(pe, ev, -orient)
                if s_after == s_before:
                    continue
                dir_ = (s_after - s_before) // 2
                sq = ev.sign_of(qe)
                if sq == 0:
                    # the rectangle boundary runs through a common zero (a
                    # point-interval coordinate does this); not certifiable
                    raise _EdgeDegenerate()
                total += dir_ * sq
    except _EdgeDegenerate:
        return None
    if total % 2:
        raise AssertionError("odd crossing sum on rectangle boundary")
    return -total // 2


# ----------------------------------------------------------------------------
# the solver
# ----------------------------------------------------------------------------

def _roots_with_multiplicity(r: UPoly) -> List[Tuple[AlgNumber, int]]:
    out: List[Tuple[AlgNumber, int]] = []
    for base, mult in sym.factor_upoly(r):
        mp = base.primitive()
        if mp.lc < 0:
            mp = -mp
        for lo, hi in mp.isolate_roots():
            if lo == hi:
                out.append((AlgNumber.from_rat(lo), mult))
            else:
                out.append((AlgNumber(mp, lo, hi), mult))
    return out


def common_zeros(p: BPoly, q: BPoly) -> List[PlanePoint]:
    """All real common zeros of p and q, certified; raises if infinite."""
    if p.is_zero() and q.is_zero():
        raise InfiniteZeroSetError("both polynomials vanish identically")
    if p.is_zero() or q.is_zero():
        other = q if p.is_zero() else p
        if other.is_constant():
            return []
        raise InfiniteZeroSetError("one polynomial vanishes identically")
    if p.is_constant() or q.is_constant():
        return []
    g = sym.gcd_bpoly(p, q)
    if not g.is_constant():
        raise InfiniteZeroSetError(
            f"shared factor of positive degree: {g}")

    r_x = sym.resultant_wrt(p, q, 2)
    r_y = sym.resultant_wrt(p, q, 1)
    if r_x.is_zero() or r_y.is_zero():
        raise InfiniteZeroSetError("eliminant vanished identically")
    if r_x.is_constant() or r_y.is_constant():
        return []

    xroots = _roots_with_multiplicity(r_x)
    yroots = _roots_with_multiplicity(r_y)
    xs = [a for a, _ in xroots]
    ys = [a for a, _ in yroots]
    _sort_algnums(xs)
    _sort_algnums(ys)
    disjoint_enclosures(xs)
    disjoint_enclosures(ys)
    xmult = {id(a): m for a, m in xroots}

    # candidate grid with cheap interval exclusion
    alive: Dict[Tuple[int, int], bool] = {}
    for i, xa in enumerate(xs):
        for j, yb in enumerate(ys):
            alive[(i, j)] = True
    for _ in range(MAX_CHEAP_REFINEMENTS):
        pending = [(i, j) for (i, j), ok in alive.items() if ok]
        if not pending:
            break
        progress = False
        for i, j in pending:
            sx = p.eval_box(xs[i].interval, ys[j].interval)
            sy = q.eval_box(xs[i].interval, ys[j].interval)
            if iv_sign(sx) not in (None, 0) or iv_sign(sy) not in (None, 0):
                alive[(i, j)] = False
                progress = True
        if not any(alive.values()):
            break
        for a in xs:
            a.refine_step()
        for b in ys:
            b.refine_step()

    lc_p = p.lc_in_2() if p.deg2 > 0 else None
    lc_q = q.lc_in_2() if q.deg2 > 0 else None

    solutions: List[PlanePoint] = []
    for i, xa in enumerate(xs):
        column = [j for j in range(len(ys)) if alive[(i, j)]]
        if not column:
            continue
        # layer 1: simple eliminant root with well-behaved leading coeffs
        if xmult[id(xa)] == 1 and lc_p is not None and lc_q is not None \
                and xa.sign_of(lc_p) != 0 and xa.sign_of(lc_q) != 0:
            j = _unique_survivor(p, q, xa, ys, column)
            solutions.append(PlanePoint(xa, ys[j]))
            continue
        for j in column:
            pt = _decide_box(p, q, xa, ys[j])
            if pt is not None:
                solutions.append(pt)
    return solutions


def _sort_algnums(values: List[AlgNumber]) -> None:
    import functools
    values.sort(key=functools.cmp_to_key(lambda a, b: a.compare(b)))


def _unique_survivor(p: BPoly, q: BPoly, xa: AlgNumber,
                     ys: List[AlgNumber], column: List[int]) -> int:
    """Exactly one common point exists over xa; find which y-box holds it."""
    live = list(column)
    while len(live) > 1:
        for j in list(live):
            sx = iv_sign(p.eval_box(xa.interval, ys[j].interval))
            sy = iv_sign(q.eval_box(xa.interval, ys[j].interval))
            if (sx is not None and sx != 0) or (sy is not None and sy != 0):
                live.remove(j)
        xa.refine_step()
        for j in live:
            ys[j].refine_step()
    if not live:
        raise AssertionError("certified solution vanished from all boxes")
    return live[0]


def _decide_box(p: BPoly, q: BPoly, xa: AlgNumber,
                yb: AlgNumber) -> Optional[PlanePoint]:
    """Layers 2 and 3: decide existence inside one candidate box."""
    for _ in range(4):
        deg = boundary_degree(p, q, xa.interval, yb.interval)
        if deg is None:
            xa.refine_step()
            yb.refine_step()
            continue
        if deg != 0:
            return PlanePoint(xa, yb)
        break
    if sign_at(p, xa, yb) == 0 and sign_at(q, xa, yb) == 0:
        return PlanePoint(xa, yb)
    return None
