"""Measurements on rational circles: intersections, sign profiles, winding.

A circle with rational center and radius carries the parametrization

    x = a1 + R (1 - t^2) / (1 + t^2),   y = a2 + 2 R t / (1 + t^2),

which is rational in t and covers every point except the antipode
(a1 - R, a2).  Substituting it into a bivariate polynomial and clearing the
positive denominator turns every on-circle question (where does a curve meet
the circle, what sign does a polynomial take on an arc) into exact univariate
root isolation.  Increasing t traverses the circle counterclockwise; the
antipode sits between t -> +oo and t -> -oo and is always tested separately
by direct evaluation.

On top of the sign profiles this module computes winding numbers of
polynomial vector fields by counting signed crossings, local degrees of a
gradient at an isolated zero, and the degree at infinity on a circle
enclosing all critical points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

from .algnum import AlgNumber, cmp_values, merge_values, separating_rationals
from .bpoly import BPoly, gradient
from .rational import (Interval, Rat, RatLike, iv_add, iv_div, iv_point,
                       iv_pow, iv_scale, iv_sq, iv_sub, iv_width, rat, sign)
from .solve2 import (InfiniteZeroSetError, PlanePoint, _locate_root,
                     common_zeros)
from .sym import gcd_bpoly, resultant_wrt, square_free_bpoly
from .upoly import UPoly


class VanishesOnCircleError(ValueError):
    """A constraint polynomial is identically zero on the circle."""


class CommonZeroOnCircleError(ValueError):
    """Both components of a vector field vanish at a point of the circle."""


class SeparatingCircleError(ValueError):
    """No circle with rational data separates the target from an obstacle."""

    def __init__(self, message: str, conflict=None):
        super().__init__(message)
        self.conflict = conflict


@dataclass(frozen=True)
class Circle:
    center: Tuple[Fraction, Fraction]
    radius: Fraction

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError(f"circle radius must be positive, got {self.radius}")

    def point_at(self, t: RatLike) -> Tuple[Fraction, Fraction]:
        """Exact coordinates of the parameter-t point."""
        tv = rat(t)
        z = 1 + tv * tv
        a1, a2 = self.center
        return (a1 + self.radius * (1 - tv * tv) / z,
                a2 + 2 * self.radius * tv / z)

    @property
    def antipode(self) -> Tuple[Fraction, Fraction]:
        return (self.center[0] - self.radius, self.center[1])

    def __str__(self) -> str:
        return f"circle(center=({self.center[0]}, {self.center[1]}), R={self.radius})"


@lru_cache(maxsize=None)
def compose(g: BPoly, c: Circle) -> Tuple[UPoly, int]:
    """Restrict g to the circle: returns (N, d) with g = N(t) / (1+t^2)^d.

    d is the total degree of g, so the denominator is positive and the sign
    of g along the parametrized part of the circle is the sign of N.
    """
    if g.is_zero():
        return UPoly.zero("t"), 0
    t = UPoly.variable("t")
    t2 = t * t
    z = t2 + 1
    a1, a2 = c.center
    big_x = z * a1 + (1 - t2) * c.radius
    big_y = z * a2 + t * (2 * c.radius)
    d = g.total_degree
    out = UPoly.zero("t")
    for (i, j), coef in g.terms:
        out = out + (big_x ** i) * (big_y ** j) * (z ** (d - i - j)) * coef
    return out, d


class CirclePoint:
    """A point on a circle: a parameter value t, or the antipode (t = None)."""

    __slots__ = ("circle", "t")

    def __init__(self, circle: Circle, t: Optional[AlgNumber]):
        self.circle = circle
        self.t = t

    @property
    def is_antipode(self) -> bool:
        return self.t is None

    def xy_box(self) -> Tuple[Interval, Interval]:
        """Rational box around the point, from the current t enclosure."""
        if self.t is None:
            ax, ay = self.circle.antipode
            return iv_point(ax), iv_point(ay)
        u = self.t.interval
        t2 = iv_sq(u)
        z = iv_add((Fraction(1), Fraction(1)), t2)
        a1, a2 = self.circle.center
        xs = iv_add(iv_point(a1),
                    iv_scale(iv_div(iv_sub((Fraction(1), Fraction(1)), t2), z),
                             self.circle.radius))
        ys = iv_add(iv_point(a2), iv_scale(iv_div(u, z), 2 * self.circle.radius))
        return xs, ys

    def refine_xy(self, width: RatLike) -> Tuple[Interval, Interval]:
        """Shrink the enclosure until both coordinate widths are <= width."""
        w = rat(width)
        for _ in range(400):
            xs, ys = self.xy_box()
            if iv_width(xs) <= w and iv_width(ys) <= w:
                return xs, ys
            self.t.refine_step()
        raise RuntimeError("circle point enclosure failed to converge")

    def __repr__(self) -> str:
        if self.t is None:
            ax, ay = self.circle.antipode
            return f"CirclePoint(antipode ({ax}, {ay}))"
        return f"CirclePoint(t={self.t!r})"


def value_on_circle(g: BPoly, pt: CirclePoint) -> AlgNumber:
    """The exact value of g at a circle point, as an algebraic number.

    On the parametrized part g = N(t)/(1+t^2)^d, so the value z satisfies
    Res_t(minpoly(t), z (1+t^2)^d - N(t)) = 0 and a shrinking interval
    enclosure singles out which root it is.
    """
    c = pt.circle
    if pt.is_antipode:
        return AlgNumber.from_rat(g(*c.antipode))
    n, d = compose(g, c)
    t = pt.t
    if t.is_rational():
        tv = t.as_rational()
        return AlgNumber.from_rat(n(tv) / (1 + tv * tv) ** d)
    tz = ("t", "z")
    lifted = (BPoly.var2(tz) * BPoly.from_upoly((UPoly.variable("t") ** 2 + 1) ** d, 0, tz)
              - BPoly.from_upoly(n, 0, tz))
    candidates = resultant_wrt(BPoly.from_upoly(t.minpoly, 0, tz), lifted, 1)
    assert not candidates.is_zero()
    one = (Fraction(1), Fraction(1))

    def enclose() -> Interval:
        t.refine_step()
        u = t.interval
        den = iv_pow(iv_add(one, iv_sq(u)), d)
        return iv_div(n.eval_interval(u), den)

    return _locate_root(AlgNumber.roots_of(candidates), enclose)


@dataclass
class ProfileEvent:
    point: CirclePoint
    signs: List[int]


@dataclass
class CircleProfile:
    """Sign data of a constraint list along a circle.

    events are in counterclockwise order: finite parameters ascending, then
    the antipode if some constraint vanishes there.  arcs[i] is the constant
    sign vector on the open arc between events[i] and events[(i+1) % n]; with
    no events at all, arcs holds the single sign vector of the whole circle.
    """

    circle: Circle
    constraints: Tuple[BPoly, ...]
    events: List[ProfileEvent]
    arcs: List[List[int]]

    def sign_change(self, i: int, k: int) -> int:
        """Direction (+1/-1, or 0 if tangential) of constraint k at event i."""
        n = len(self.events)
        before = self.arcs[(i - 1) % n][k]
        after = self.arcs[i][k]
        return (after - before) // 2

    def points_of(self, k: int) -> List[CirclePoint]:
        return [e.point for e in self.events if e.signs[k] == 0]

    def euler_chi(self, qualifies: Callable[[Sequence[int]], bool]) -> int:
        """chi_c of the subset where the sign vector qualifies.

        Qualifying events count +1 and qualifying open arcs -1; a circle with
        no events is a single closed curve, chi_c = 0 whether kept or not.
        For sign conditions built from <=, =, >= the set is compact, so this
        equals the ordinary Euler characteristic.
        """
        if not self.events:
            return 0
        pts = sum(1 for e in self.events if qualifies(e.signs))
        arcs = sum(1 for s in self.arcs if qualifies(s))
        return pts - arcs


def circle_profile(constraints: Sequence[BPoly], c: Circle) -> CircleProfile:
    """Events and arc signs of the constraints along the circle.

    Raises VanishesOnCircleError if any constraint is zero on all of c (its
    restriction N is the zero polynomial, and by continuity the antipode
    value vanishes too); callers respond by changing the radius.
    """
    comps: List[UPoly] = []
    for g in constraints:
        n, _ = compose(g, c)
        if n.is_zero():
            raise VanishesOnCircleError(f"{g} vanishes identically on {c}")
        comps.append(n)

    ax, ay = c.antipode
    anti_vals = [g(ax, ay) for g in constraints]
    finite_ts = merge_values(*[AlgNumber.roots_of(n) for n in comps])
    has_anti = any(v == 0 for v in anti_vals)

    events: List[ProfileEvent] = []
    for t in finite_ts:
        events.append(ProfileEvent(CirclePoint(c, t), [t.sign_of(n) for n in comps]))
    if has_anti:
        events.append(ProfileEvent(CirclePoint(c, None), [sign(v) for v in anti_vals]))

    nf = len(finite_ts)
    anti_signs = [sign(v) for v in anti_vals]
    if not events:
        at_zero = [sign(n(0)) for n in comps]
        assert at_zero == anti_signs, "sign not constant on an event-free circle"
        return CircleProfile(c, tuple(constraints), [], [at_zero])

    seps = separating_rationals(finite_ts) if nf else []
    arcs: List[List[int]] = []
    for i, ev in enumerate(events):
        if not ev.point.is_antipode:
            if i + 1 < nf:
                arcs.append([sign(n(seps[i + 1])) for n in comps])
            elif has_anti:
                arcs.append([sign(n(seps[nf])) for n in comps])
            else:
                # the wrap arc passes through the antipode; sample it there
                arcs.append(list(anti_signs))
        else:
            if nf:
                arcs.append([sign(n(seps[0])) for n in comps])
            else:
                arcs.append([sign(n(0)) for n in comps])
    assert all(all(s != 0 for s in arc) for arc in arcs), "missed event on an arc"
    return CircleProfile(c, tuple(constraints), events, arcs)


def curve_circle_intersections(g: BPoly, c: Circle) -> CircleProfile:
    """All points of {g = 0} on the circle, as a single-constraint profile."""
    prof = circle_profile([g], c)
    transverse = sum(1 for i in range(len(prof.events)) if prof.sign_change(i, 0) != 0)
    assert transverse % 2 == 0, "odd number of transverse curve crossings"
    return prof


def _winding_from_profile(prof: CircleProfile) -> int:
    total = 0
    for i, ev in enumerate(prof.events):
        if ev.signs[0] != 0:
            continue
        if ev.signs[1] == 0:
            raise CommonZeroOnCircleError(
                f"vector field vanishes at {ev.point!r} on {prof.circle}")
        total += prof.sign_change(i, 0) * ev.signs[1]
    assert total % 2 == 0
    # convention check on the identity field (x, y), unit circle: its two
    # crossings of {x = 0} each contribute dir * sign(y) = -1, degree is +1
    return -total // 2


def winding_number(P: BPoly, Q: BPoly, c: Circle) -> int:
    """Degree of (P, Q)/|(P, Q)| on the circle, by signed crossing count.

    Transverse zeros of P contribute (sign change of P) * sign(Q); tangential
    ones contribute 0.  Errors if P and Q vanish together on the circle or if
    either vanishes identically on it.
    """
    return _winding_from_profile(circle_profile([P, Q], c))


def _transverse_winding(P: BPoly, Q: BPoly, center: Tuple[Fraction, Fraction],
                        radius: Fraction) -> int:
    """Winding number, bumping the radius past any tangential intersection.

    Tangency is judged on the square-free parts: a doubled component (like
    f_y = x^2) never changes sign at any radius, yet contributes exactly 0
    to the crossing count, so only tangencies of the reduced curves force a
    larger radius (and those occur at finitely many radii).
    """
    p_red, q_red = square_free_bpoly(P), square_free_bpoly(Q)
    for _ in range(64):
        try:
            prof = circle_profile([P, Q, p_red, q_red], Circle(center, radius))
        except VanishesOnCircleError:
            radius = Fraction(int(radius) + 1)
            continue
        tangential = any(ev.signs[k] == 0 and prof.sign_change(i, k + 2) == 0
                         for i, ev in enumerate(prof.events) for k in (0, 1))
        if tangential:
            radius = Fraction(int(radius) + 1)
            continue
        return _winding_from_profile(prof)
    raise RuntimeError("no transverse measuring radius found after 64 bumps")


XY = Tuple[AlgNumber, AlgNumber]


def separating_circle(target: XY, obstacles: Sequence[XY]) -> Circle:
    """A rational circle with the target strictly inside, obstacles outside.

    Works by squeezing a positive rational lower bound b on the squared
    distance to every obstacle, picking R with 2R < sqrt(b), and centering on
    a midpoint of a target box of width R/2: the target is then within R/4 of
    the center while each obstacle stays beyond 2R - R/2 > R.
    """
    tx, ty = target
    bound: Optional[Fraction] = None
    for ox, oy in obstacles:
        if cmp_values(tx, ox) == 0 and cmp_values(ty, oy) == 0:
            raise SeparatingCircleError(
                "obstacle coincides with the target point", conflict=(ox, oy))
        w = Fraction(1, 4)
        while True:
            for v in (tx, ty, ox, oy):
                v.refine_to(w)
            d2 = iv_add(iv_sq(iv_sub(ox.interval, tx.interval)),
                        iv_sq(iv_sub(oy.interval, ty.interval)))
            if d2[0] > 0:
                bound = d2[0] if bound is None else min(bound, d2[0])
                break
            w /= 4
    if bound is None:
        bound = Fraction(1)
    radius = Fraction(1)
    while 4 * radius * radius >= bound:
        radius /= 2
    tx.refine_to(radius / 2)
    ty.refine_to(radius / 2)
    cx = (tx.interval[0] + tx.interval[1]) / 2
    cy = (ty.interval[0] + ty.interval[1]) / 2
    return Circle((cx, cy), radius)


def local_degree(f: BPoly, p: PlanePoint,
                 zeros: Optional[Sequence[PlanePoint]] = None) -> int:
    """Degree of grad f on a small circle around one of its isolated zeros.

    p must be one of the zeros of grad f; the others (recomputed here unless
    passed in) become obstacles for the separating circle.
    """
    fx, fy = gradient(f)
    if zeros is None:
        zeros = common_zeros(fx, fy)
    obstacles = [(z.x, z.y) for z in zeros
                 if not (cmp_values(z.x, p.x) == 0 and cmp_values(z.y, p.y) == 0)]
    c = separating_circle((p.x, p.y), obstacles)
    return winding_number(fx, fy, c)


def degree_at_infinity(f: BPoly) -> int:
    """Degree of grad f on a circle beyond every critical point.

    The radius starts past the Cauchy root bounds of both gradient
    eliminants (so the circle encloses all zeros of grad f) and is bumped to
    the next integer while any intersection with {f_x = 0} or {f_y = 0} is
    tangential.
    """
    fx, fy = gradient(f)
    if fx.is_zero() and fy.is_zero():
        raise InfiniteZeroSetError("gradient vanishes identically")
    if fx.is_zero() or fy.is_zero():
        u = (fy if fx.is_zero() else fx).univariate()
        if u.count_real_roots() > 0:
            raise InfiniteZeroSetError("critical set contains whole lines")
        return 0
    if not gcd_bpoly(fx, fy).is_constant():
        raise InfiniteZeroSetError("gradient components share a factor")
    r_x = resultant_wrt(fx, fy, 2)
    r_y = resultant_wrt(fx, fy, 1)
    bound = Fraction(0)
    for r in (r_x, r_y):
        assert not r.is_zero()
        if r.degree >= 1:
            bound = max(bound, r.cauchy_root_bound())
    return _transverse_winding(fx, fy, (Fraction(0), Fraction(0)),
                               Fraction(int(bound) + 1))
