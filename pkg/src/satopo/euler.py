"""Euler characteristics of polynomial level and sublevel sets in the plane.

Compactly supported Euler characteristic chi_c is computed by an exact
cylindrical sweep: choose the x-abscissas where the fiber structure of the
defining curves can change (vertical lines, leading-coefficient drops,
self-tangencies, pairwise crossings), then decompose the plane into points,
open vertical segments, curve segments over open x-intervals, and open bands.
chi_c adds (-1)^dim over the qualifying cells.  Everything is exact: cells
are located by real root isolation and classified by certified sign tests,
and sample abscissas/ordinates are rationals strictly between the isolated
roots, so a wrong answer would require a wrong sign somewhere.

Ordinary chi of a closed (or level) set differs from chi_c by the Euler
characteristic of the link at infinity, which the infinity module reads off
a far circle; chi = chi_c + link holds for every flavor and never relies on
homotopy reasoning.

Levels with algebraic (irrational) values are handled by a collar: between
two rational levels that bracket the value away from every critical and
asymptotic critical value, the function is a locally trivial fibration on
either side, so chi_c of the open collar splits as (-1) times each side's
fiber plus the level itself.  The collar is swept as a two-constraint system
and the side fibers at rational samples, which leaves the level's chi_c as
the only unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .algnum import (AlgNumber, Value, as_algnum, cmp_values, merge_values,
                     separating_rationals)
from .bpoly import BPoly
from .critical import critical_values
from .infinity import (_flavor, generic_basepoint, jump_sets, lambda_set,
                       link_chi, link_counts_at)
from .rational import RatLike, rat, sign
from .solve2 import sign_at
from .sym import exact_div_bpoly, gcd_bpoly, resultant_wrt, square_free_bpoly
from .upoly import UPoly

XY = Tuple[Fraction, Fraction]

# sign sets cut out by each flavor of the constraint "f - alpha  <flavor>  0"
_ALLOWED = {"le": (-1, 0), "eq": (0,), "ge": (0, 1)}

Constraint = Tuple[BPoly, Tuple[int, ...]]


@dataclass(frozen=True)
class CellComplexSummary:
    """Open-cell counts of a swept semialgebraic set, by dimension."""

    counts: Tuple[int, int, int]
    events: Tuple[AlgNumber, ...]

    @property
    def chi_c(self) -> int:
        c0, c1, c2 = self.counts
        return c0 - c1 + c2


@dataclass(frozen=True)
class _Curve:
    """One sign constraint, split for the sweep.

    content carries the vertical-line components of the square-free form
    (degree 0 when there are none); core is square-free with no x-only
    factor, so its discriminant-style resultants never vanish identically.
    Signs are always taken on the raw polynomial g.
    """

    g: BPoly
    allowed: Tuple[int, ...]
    content: UPoly
    core: BPoly


def _split(g: BPoly) -> Tuple[UPoly, BPoly]:
    gs = square_free_bpoly(g)
    coeffs = [c for c in gs.coeffs_in_2() if not c.is_zero()]
    cont = coeffs[0]
    for c in coeffs[1:]:
        cont = cont.gcd(c)
    if cont.degree < 1:
        return cont, gs
    return cont, exact_div_bpoly(gs, BPoly.from_upoly(cont, 0, gs.vars))


def _qualifies(vec: Sequence[int], curves: Sequence[_Curve]) -> bool:
    return all(s in c.allowed for s, c in zip(vec, curves))


def _event_abscissas(curves: Sequence[_Curve]) -> List[AlgNumber]:
    polys: List[UPoly] = []
    for c in curves:
        if c.content.degree >= 1:
            polys.append(c.content)
        if c.core.deg2 >= 1:
            lc = c.core.lc_in_2()
            if lc.degree >= 1:
                polys.append(lc)
            disc = resultant_wrt(c.core, c.core.d2(), 2)
            if disc.is_zero():
                raise AssertionError("square-free core with zero discriminant")
            polys.append(disc)
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            ci, cj = curves[i].core, curves[j].core
            if ci.deg2 < 1 or cj.deg2 < 1:
                continue
            common = gcd_bpoly(ci, cj)
            if common.is_constant():
                parts = [(ci, cj)]
            else:
                # shared component: its crossings with both residual parts
                # still bound the fiber changes, and all three pairs are
                # coprime because ci and cj are square-free
                ci1 = exact_div_bpoly(ci, common)
                cj1 = exact_div_bpoly(cj, common)
                parts = [(ci1, cj1), (common, ci1), (common, cj1)]
            for u, v in parts:
                if u.is_constant() or v.is_constant():
                    continue
                r = resultant_wrt(u, v, 2)
                if r.is_zero():
                    raise AssertionError("coprime pair with zero resultant")
                polys.append(r)
    return merge_values(*(AlgNumber.roots_of(p) for p in polys if p.degree >= 1))


def _fiber_candidates(e: AlgNumber, curves: Sequence[_Curve]) -> List[AlgNumber]:
    """Ordinates covering every constraint zero on the vertical line x = e."""
    lists = []
    for c in curves:
        if c.core.deg2 < 1:
            continue
        if e.is_rational():
            p = c.core.eval_1(e.as_rational())
        else:
            mp = BPoly.from_upoly(e.minpoly, 0, c.core.vars)
            p = resultant_wrt(mp, c.core, 1)
        if p.is_zero():
            raise AssertionError("content-free core vanished on a fiber")
        if p.degree >= 1:
            lists.append(AlgNumber.roots_of(p))
    return merge_values(*lists)


def sweep(constraints: Sequence[Constraint]) -> CellComplexSummary:
    """Cell decomposition of the set where every constraint sign is allowed.

    Constraints are (polynomial, allowed signs) pairs over a common variable
    pair; an empty list describes the whole plane.
    """
    curves: List[_Curve] = []
    for g, allowed in constraints:
        if g.is_zero() or g.is_constant():
            s = 0 if g.is_zero() else sign(g.constant_value())
            if s in allowed:
                continue
            return CellComplexSummary((0, 0, 0), ())
        cont, core = _split(g)
        curves.append(_Curve(g, tuple(allowed), cont, core))

    events = _event_abscissas(curves)
    c0 = c1 = c2 = 0

    # slabs between (and beyond) the events, sampled at a rational abscissa;
    # inside a slab no root of any core can appear, vanish, escape, or meet
    # another, so the sampled column is the picture over the whole slab
    for s in separating_rationals(events):
        restr = [c.g.eval_1(s) for c in curves]
        ys = merge_values(*(AlgNumber.roots_of(c.core.eval_1(s))
                            for c in curves if c.core.deg2 >= 1))
        for r in ys:
            if _qualifies([r.sign_of(p) for p in restr], curves):
                c1 += 1
        for q in separating_rationals(ys):
            vec = [sign(p(q)) for p in restr]
            if 0 in vec:
                raise AssertionError("missed a fiber root in a slab column")
            if _qualifies(vec, curves):
                c2 += 1

    # event columns: isolated points and the open segments between them
    for e in events:
        vert = [c.content.degree >= 1 and e.sign_of(c.content) == 0
                for c in curves]
        ys = _fiber_candidates(e, curves)
        for r in ys:
            vec = [0 if v else sign_at(c.g, e, r)
                   for v, c in zip(vert, curves)]
            if _qualifies(vec, curves):
                c0 += 1
        for q in separating_rationals(ys):
            vec = [0 if v else e.sign_of(c.g.eval_2(q))
                   for v, c in zip(vert, curves)]
            if any(s == 0 and not v for s, v in zip(vec, vert)):
                raise AssertionError("missed a fiber root on an event column")
            if _qualifies(vec, curves):
                c1 += 1

    return CellComplexSummary((c0, c1, c2), tuple(events))


def cell_complex(f: BPoly, alpha: RatLike, flavor: str = "le") -> CellComplexSummary:
    """Sweep summary of {f <= alpha}, {f = alpha} or {f >= alpha}."""
    fl = _flavor(flavor)
    g = f - rat(alpha)
    if g.is_zero():
        raise ValueError("the level set is the whole plane")
    return sweep([(g, _ALLOWED[fl])])


def chi_c(f: BPoly, alpha: RatLike, flavor: str = "le") -> int:
    """Compactly supported Euler characteristic of one sign condition."""
    return cell_complex(f, alpha, flavor).chi_c


def chi(f: BPoly, alpha: RatLike, flavor: str = "le") -> int:
    """Ordinary Euler characteristic: chi_c plus the link at infinity."""
    fl = _flavor(flavor)
    return chi_c(f, alpha, fl) + link_chi(f, rat(alpha), fl)


def _collar(f: BPoly, g: AlgNumber, a: XY) -> Tuple[Fraction, Fraction, int, int, int]:
    """Rational bracket around an algebraic level, clear of every breakpoint.

    Returns (s_lo, s_hi, chi_c of the two side fibers, chi_c of {g} itself).
    The bracket contains no critical or asymptotic critical value besides
    possibly g, so f fibers trivially over both open sides and chi_c of the
    open collar is (-fiber_lo) + chi_c(level) + (-fiber_hi).
    """
    bad = merge_values(critical_values(f), lambda_set(f, a).values, [g])
    seps = separating_rationals(bad)
    pos = next(i for i, b in enumerate(bad) if cmp_values(b, g) == 0)
    s_lo, s_hi = seps[pos], seps[pos + 1]
    while not (s_lo < g.interval[0] and g.interval[1] < s_hi):
        g.refine_step()
    m_lo = (s_lo + g.interval[0]) / 2
    m_hi = (g.interval[1] + s_hi) / 2
    below = chi_c(f, m_lo, "eq")
    above = chi_c(f, m_hi, "eq")
    band = sweep([(f - s_lo, (1,)), (f - s_hi, (-1,))]).chi_c
    return s_lo, s_hi, below, above, band + below + above


def chi_c_at(f: BPoly, gamma: Value | RatLike, flavor: str = "eq",
             a: Optional[Tuple[RatLike, RatLike]] = None, seed: int = 0) -> int:
    """chi_c at an arbitrary algebraic level value."""
    fl = _flavor(flavor)
    g = as_algnum(gamma)
    if g.is_rational():
        return chi_c(f, g.as_rational(), fl)
    base = generic_basepoint(f, seed) if a is None else (rat(a[0]), rat(a[1]))
    s_lo, s_hi, below, above, at_level = _collar(f, g, base)
    if fl == "eq":
        return at_level
    if fl == "le":
        # {f <= g} = {f <= s_lo} + {s_lo < f < g} + {f = g}
        return chi_c(f, s_lo, "le") - below + at_level
    return chi_c(f, s_hi, "ge") - above + at_level


def chi_at(f: BPoly, gamma: Value | RatLike, flavor: str = "eq",
           a: Optional[Tuple[RatLike, RatLike]] = None, seed: int = 0) -> int:
    """Ordinary chi at an arbitrary algebraic level value."""
    fl = _flavor(flavor)
    g = as_algnum(gamma)
    if g.is_rational():
        return chi(f, g.as_rational(), fl)
    base = generic_basepoint(f, seed) if a is None else (rat(a[0]), rat(a[1]))
    counts = link_counts_at(f, base, g)
    idx = {"eq": 0, "le": 1, "ge": 2}[fl]
    return chi_c_at(f, g, fl, base) + counts[idx]


@dataclass(frozen=True)
class FiberProfile:
    """chi of every fiber of f, as a function of the level.

    plateaus[i] is the constant chi on the i-th open interval between
    consecutive breakpoints (outermost intervals included), so there is
    always one more plateau than breakpoints; at_breakpoints[i] is chi of
    the fiber at breakpoints[i] itself.
    """

    breakpoints: Tuple[AlgNumber, ...]
    plateaus: Tuple[int, ...]
    at_breakpoints: Tuple[int, ...]

    def chi_at_level(self, t: Value | RatLike) -> int:
        for i, b in enumerate(self.breakpoints):
            c = cmp_values(t, b)
            if c == 0:
                return self.at_breakpoints[i]
            if c < 0:
                return self.plateaus[i]
        return self.plateaus[-1]


def fiber_profile(f: BPoly, a: Optional[Tuple[RatLike, RatLike]] = None,
                  seed: int = 0) -> FiberProfile:
    """chi of {f = t} for every t, certified piecewise constant.

    Breakpoints are the critical values together with the levels where the
    sublevel or suplevel link jumps.  Each plateau is evaluated at the
    rational midpoint and spot-checked at two further rationals in the same
    interval; a disagreement would falsify the breakpoint set and raises.
    """
    base = generic_basepoint(f, seed) if a is None else (rat(a[0]), rat(a[1]))
    le, _, ge = jump_sets(f, base)
    bps = merge_values(critical_values(f), le.values, ge.values)
    seps = separating_rationals(bps)
    plateaus = []
    for i, s in enumerate(seps):
        if i == 0:
            extras = [s - 1, s - 2]
        elif i == len(bps):
            extras = [s + 1, s + 2]
        else:
            extras = [(bps[i - 1].interval[1] + s) / 2,
                      (s + bps[i].interval[0]) / 2]
        v = chi(f, s, "eq")
        for t in extras:
            if chi(f, t, "eq") != v:
                raise AssertionError(
                    f"fiber chi not constant between breakpoints near {s}")
        plateaus.append(v)
    ats = [chi_at(f, b, "eq", base) for b in bps]
    return FiberProfile(tuple(bps), tuple(plateaus), tuple(ats))
