"""Stratified sets in the plane: regions with smooth boundary, and curves.

Two kinds of closed sets cut out by a single polynomial g are supported:
regions {g <= 0} whose boundary curve {g = 0} is smooth, and the smooth
curves themselves.  Such a set X carries an obvious stratification (open
interior plus boundary curve, or just the curve), and a polynomial f
restricted to X has critical points in the stratified sense: honest gradient
zeros in the interior, plus boundary points where grad f is parallel to
grad g.

At a boundary critical point write grad f = lambda grad g.  For a region
with lambda > 0 the gradient pushes outward, nearby lower level sets retract
onto a ball, and the point contributes index 0.  With lambda < 0, or on a
curve, the index is 1 - (number of nearby lower-fiber points on the curve),
decided exactly by the sign of the second derivative of f along the curve:
+1 at a minimum of the restriction, -1 at a maximum.

For a unit direction v the linear form v*(x, y) = v1 x + v2 y is a Morse
function on X for every v outside a finite bad set, computed by elimination:
directions whose tangency points escape to infinity (leading coefficients of
the eliminants drop degree) and directions where the family of tangency
points folds.  Between consecutive bad directions the total index sum of v*
is constant, which turns its average over the direction circle, the
Gauss-Bonnet measure of X, into a finite weighted sum of integers with
arc-length weights.  Arc lengths are angles, enclosed rigorously by rational
arctangent bounds, so the average comes back as a rational value with an
explicit error bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from .algnum import (AlgNumber, cmp_values, dedup_sorted,
                     separating_rationals, sort_values)
from .bpoly import BPoly, gradient
from .circle import Circle, CirclePoint, VanishesOnCircleError, circle_profile
from .critical import find_critical_points
from .euler import Constraint, sweep
from .infinity import _coprime_zero_bound, _lc_roots, _tangency_bound
from .rational import (Interval, RatLike, iv_add, iv_div, iv_scale, iv_sub,
                       rat, sign)
from .solve2 import (InfiniteZeroSetError, PlanePoint, _locate_root,
                     common_zeros, sign_at, value_at)
from .sym import (exact_div_bpoly, factor_bpoly, gcd_bpoly, pencil_resultant,
                  resultant_wrt, square_free_bpoly)
from .upoly import UPoly

_ORIGIN = (Fraction(0), Fraction(0))

#: Unit circle whose points parametrize directions: t is the tangent
#: half-angle, v(t) = ((1 - t^2)/(1 + t^2), 2t/(1 + t^2)), antipode (-1, 0).
DIRECTION_CIRCLE = Circle(_ORIGIN, Fraction(1))


class SingularBoundaryError(ValueError):
    """The gradient of g vanishes somewhere on {g = 0}."""


class DegenerateStratifiedPointError(ValueError):
    """A boundary critical point violates the nondegeneracy hypotheses."""


class BadDirectionError(ValueError):
    """The requested direction lies in the bad set of X."""


# ----------------------------------------------------------------------------
# sets
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class PlaneSet:
    """A closed set cut out by one polynomial: {g <= 0} or {g = 0}.

    kind "region" carries two strata (open interior and boundary curve),
    kind "curve" just the curve.  Build through plane_set, which certifies
    smoothness and nonemptiness; this raw constructor checks nothing.
    """

    g: BPoly
    kind: str

    @property
    def allowed_signs(self) -> Tuple[int, ...]:
        return (-1, 0) if self.kind == "region" else (0,)

    @property
    def constraint(self) -> Constraint:
        return (self.g, self.allowed_signs)

    def __str__(self) -> str:
        rel = "<=" if self.kind == "region" else "="
        return f"{{{self.g} {rel} 0}}"


def _certify_smooth(g: BPoly) -> None:
    gx, gy = gradient(g)
    if gx.is_zero() or gy.is_zero():
        # g depends on a single variable: a union of parallel lines, smooth
        # exactly when no real root of the univariate form repeats
        u = g.univariate()
        rep = u.gcd(u.derivative())
        if rep.degree >= 1 and rep.count_real_roots() > 0:
            raise SingularBoundaryError(
                f"{{{g} = 0}} contains a repeated line")
        return
    try:
        candidates = common_zeros(gx, gy)
    except InfiniteZeroSetError:
        shared = gcd_bpoly(gx, gy)
        # the gradient vanishes along all of {shared = 0}; the curve must
        # avoid it, both as a component and pointwise
        if (resultant_wrt(g, shared, 1).is_zero()
                or resultant_wrt(g, shared, 2).is_zero()):
            raise SingularBoundaryError(
                f"{{{g} = 0}} has a whole component of gradient zeros")
        if common_zeros(g, shared):
            raise SingularBoundaryError(
                f"gradient of {g} vanishes at a point of the curve")
        candidates = common_zeros(exact_div_bpoly(gx, shared),
                                  exact_div_bpoly(gy, shared))
    for z in candidates:
        if sign_at(g, z.x, z.y) == 0:
            raise SingularBoundaryError(
                f"gradient of {g} vanishes at a point of the curve")


def plane_set(g: BPoly, kind: str = "region") -> PlaneSet:
    """Certified constructor: {g = 0} smooth and nonempty, interior nonempty.

    Raises SingularBoundaryError when some point of the curve kills the
    gradient (crossings, cusps, isolated zeros, repeated components) and
    ValueError when the curve, or for region kind the open set {g < 0},
    is empty.
    """
    if kind not in ("region", "curve"):
        raise ValueError(f"kind must be 'region' or 'curve', got {kind!r}")
    if g.is_constant():
        raise ValueError("a constant polynomial does not cut out a curve")
    _certify_smooth(g)
    if sum(sweep([(g, (0,))]).counts) == 0:
        raise ValueError(f"{{{g} = 0}} is empty")
    if kind == "region" and sum(sweep([(g, (-1,))]).counts) == 0:
        raise ValueError(f"{{{g} < 0}} is empty")
    return PlaneSet(g, kind)


# ----------------------------------------------------------------------------
# Euler characteristics of X and its sections
# ----------------------------------------------------------------------------

def chi_c_set(X: PlaneSet, extra: Iterable[Constraint] = ()) -> int:
    """Compactly-supported chi of X cut by extra sign conditions."""
    return sweep([X.constraint, *extra]).chi_c


def _far_radius(curves: Sequence[BPoly]) -> Fraction:
    """Radius beyond which the arrangement's trace on circles is stable.

    Bounds the radial tangencies and singular points of each curve and the
    pairwise intersections; shared components are split off so that every
    eliminated pair is coprime.
    """
    bound = Fraction(1)
    parts = [square_free_bpoly(u) for u in curves]
    for u in parts:
        bound = max(bound, _tangency_bound(u, _ORIGIN))
    for u, v in combinations(parts, 2):
        shared = gcd_bpoly(u, v)
        if shared.is_constant():
            bound = max(bound, _coprime_zero_bound(u, v, _ORIGIN))
            continue
        u1, v1 = exact_div_bpoly(u, shared), exact_div_bpoly(v, shared)
        for p, q in ((u1, v1), (shared, u1), (shared, v1)):
            if not p.is_constant() and not q.is_constant():
                bound = max(bound, _coprime_zero_bound(p, q, _ORIGIN))
    return Fraction(int(bound) + 1)


def link_chi_set(constraints: Sequence[Constraint]) -> int:
    """chi of the link at infinity of an intersection of sign conditions.

    The link is the trace of the set on any large enough origin-centered
    circle; beyond the radius bound every constraint curve crosses circles
    transversally and all pairwise intersections are enclosed, so the trace
    combinatorics no longer change.  Constant constraints are screened out
    (an unsatisfiable one empties the set); with nothing left the set is the
    whole plane and the link is a full circle, chi 0.
    """
    active: List[Constraint] = []
    for u, allowed in constraints:
        if u.is_zero() or u.is_constant():
            s = 0 if u.is_zero() else sign(u.constant_value())
            if s in allowed:
                continue
            return 0
        active.append((u, tuple(allowed)))
    if not active:
        return 0
    radius = _far_radius([u for u, _ in active])
    last: Optional[VanishesOnCircleError] = None
    for _ in range(4):
        try:
            prof = circle_profile([u for u, _ in active],
                                  Circle(_ORIGIN, radius))
        except VanishesOnCircleError as exc:
            last = exc
            radius += 1
            continue
        return prof.euler_chi(
            lambda vec: all(s in allowed
                            for s, (_, allowed) in zip(vec, active)))
    raise last


def link_set(X: PlaneSet, extra: Iterable[Constraint] = ()) -> int:
    """chi of the link at infinity of X cut by extra sign conditions."""
    return link_chi_set([X.constraint, *extra])


def chi_set(X: PlaneSet, extra: Iterable[Constraint] = ()) -> int:
    """Euler characteristic of X cut by closed extra conditions."""
    return chi_c_set(X, extra) + link_set(X, extra)


# ----------------------------------------------------------------------------
# stratified critical points
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class StratCriticalPoint:
    """A critical point of f on the stratified set, with its integer index.

    lambda_sign is the sign of <grad f, grad g> at a boundary point of a
    region (there grad f = lambda grad g, and the index rule splits on the
    sign of lambda); None for interior points and for curve kind, where no
    inside exists.
    """

    point: PlanePoint
    stratum: str
    lambda_sign: Optional[int]
    index: int

    @property
    def box(self):
        return self.point.box()


def _tangential_determinant(f: BPoly, g: BPoly) -> BPoly:
    return f.d1() * g.d2() - f.d2() * g.d1()


def _second_derivative_form(f: BPoly, g: BPoly) -> BPoly:
    """Numerator of (f o gamma)'' at a boundary critical point.

    With tau = (-g_y, g_x) tangent to {g = 0} and grad f = lambda grad g at
    the point, differentiating f(gamma(t)) twice and clearing the positive
    factor |grad g|^2 leaves

        |grad g|^2 (tau^T Hf tau) - <grad f, grad g> (tau^T Hg tau),

    whose sign is the sign of the second derivative of f along the curve.
    """
    gx, gy = gradient(g)
    fx, fy = gradient(f)
    tangential_hf = gy * gy * fx.d1() - gx * gy * fx.d2() * 2 + gx * gx * fy.d2()
    tangential_hg = gy * gy * gx.d1() - gx * gy * gx.d2() * 2 + gx * gx * gy.d2()
    return ((gx * gx + gy * gy) * tangential_hf
            - (fx * gx + fy * gy) * tangential_hg)


@lru_cache(maxsize=None)
def stratified_critical_points(X: PlaneSet,
                               f: BPoly) -> Tuple[StratCriticalPoint, ...]:
    """Critical points of f restricted to X, per stratum, with indices.

    Interior stratum (region kind only): gradient zeros of f with g < 0,
    index the local degree of the gradient.  Boundary stratum: solutions of
    {f_x g_y - f_y g_x = 0, g = 0}; the index is 1 - chi(nearby lower fiber),
    which is 0 when a region's lambda is positive and otherwise +1/-1 by the
    second-derivative test along the curve.

    Raises InfiniteZeroSetError when the boundary critical locus is
    positive-dimensional and DegenerateStratifiedPointError when lambda = 0
    at a region boundary point (the gradient of f itself vanishes there) or
    the second-derivative test is inconclusive.
    """
    g = X.g
    try:
        boundary = common_zeros(_tangential_determinant(f, g), g)
    except InfiniteZeroSetError as exc:
        raise InfiniteZeroSetError(
            f"critical locus of {f} on the boundary curve is "
            f"positive-dimensional: {exc}") from exc
    out: List[StratCriticalPoint] = []
    if X.kind == "region":
        for c in find_critical_points(f):
            if sign_at(g, c.point.x, c.point.y) < 0:
                out.append(StratCriticalPoint(c.point, "interior", None,
                                              c.local_degree))
    dot = f.d1() * g.d1() + f.d2() * g.d2()
    eform = _second_derivative_form(f, g)
    for z in boundary:
        lam = sign_at(dot, z.x, z.y)
        if X.kind == "region":
            if lam == 0:
                raise DegenerateStratifiedPointError(
                    f"gradient of {f} vanishes on the boundary curve at {z}")
            if lam > 0:
                out.append(StratCriticalPoint(z, "boundary", lam, 0))
                continue
        e = sign_at(eform, z.x, z.y)
        if e == 0:
            raise DegenerateStratifiedPointError(
                f"flat tangency of {f} along the boundary at {z}; the "
                "second-derivative test cannot settle the index")
        out.append(StratCriticalPoint(
            z, "boundary", lam if X.kind == "region" else None,
            1 if e > 0 else -1))
    return tuple(out)


def stratified_index(X: PlaneSet, f: BPoly, p: StratCriticalPoint) -> int:
    """Index of f at one of its stratified critical points.

    Indices are settled when the points are found; this mirrors the
    per-point query shape of the smooth case.
    """
    return p.index


# ----------------------------------------------------------------------------
# directions
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Direction:
    """A rational unit vector; the gradient of the linear form v1 x + v2 y."""

    v: Tuple[Fraction, Fraction]

    def __post_init__(self):
        v1, v2 = self.v
        if v1 * v1 + v2 * v2 != 1:
            raise ValueError(f"({v1}, {v2}) is not on the unit circle")

    @staticmethod
    def from_t(t: Optional[RatLike]) -> "Direction":
        """Tangent-half-angle point; t = None is the leftward direction."""
        if t is None:
            return Direction((Fraction(-1), Fraction(0)))
        tv = rat(t)
        z = 1 + tv * tv
        return Direction(((1 - tv * tv) / z, 2 * tv / z))

    def t_value(self) -> Optional[Fraction]:
        v1, v2 = self.v
        if v1 == -1:
            return None
        return v2 / (1 + v1)

    def antipode(self) -> "Direction":
        return Direction((-self.v[0], -self.v[1]))

    def linear(self, vars: Tuple[str, str] = ("x", "y")) -> BPoly:
        """The function measured along this direction, as a polynomial."""
        return BPoly.var1(vars) * self.v[0] + BPoly.var2(vars) * self.v[1]

    def __str__(self) -> str:
        return f"({self.v[0]}, {self.v[1]})"


def _neg_recip(t: AlgNumber) -> AlgNumber:
    """-1/t for a nonzero algebraic number (the antipode map on half-angles)."""
    if t.is_rational():
        return AlgNumber.from_rat(Fraction(-1) / t.as_rational())
    p = t.minpoly
    n = p.degree
    reverse = UPoly.from_coeffs(
        [p.coeff(n - j) * (-1) ** (n - j) for j in range(n + 1)], p.var)
    while t.interval[0] <= 0 <= t.interval[1]:
        t.refine_step()

    def enclose() -> Interval:
        t.refine_step()
        lo, hi = t.interval
        return (-1 / lo, -1 / hi)

    return _locate_root(AlgNumber.roots_of(reverse), enclose)


def _fold_route(r: BPoly, flat: UPoly, param: str = "s") -> List[AlgNumber]:
    """Parameter values where the tangency eliminant meets a flat coordinate.

    r is bivariate in (coordinate, param), flat univariate in the same
    coordinate; eliminating it leaves the parameter values at which some
    tangency point shares that coordinate with a curvature zero.
    """
    lift = BPoly.from_dict(
        {(k, 0): flat.coeff(k) for k in range(flat.degree + 1)},
        (flat.var, param))
    q = resultant_wrt(r, lift, 1)
    if q.is_zero():
        raise DegenerateStratifiedPointError(
            "fold eliminant vanished identically; a flat point stays "
            "tangent in every direction")
    return AlgNumber.roots_of(q) if q.degree >= 1 else []


@lru_cache(maxsize=None)
def bad_directions(X: PlaneSet) -> Tuple[CirclePoint, ...]:
    """A finite superset of the directions v where v* fails to be Morse on X.

    Two sources, eliminated per irreducible component c of the boundary.
    Escapes: K_s = (1 - s^2) c_y - 2 s c_x expresses v(s) parallel to grad c,
    and where the leading coefficient of Res_y(c, K_s) or Res_x(c, K_s)
    drops degree the tangency points run to infinity (asymptotic normal
    directions of the curve).  Folds: a tangency point degenerates exactly
    where it meets a zero of the curvature numerator W, because the
    second-derivative form of a linear function reduces to -<v, grad c> W
    and <v, grad c> cannot vanish at a tangency.  The flat set {c = W = 0}
    is s-free, so its two coordinate eliminants cut the tangency eliminants
    down to the fold parameters; both coordinates are matched and the lists
    intersected, which keeps a superset of the folds while discarding most
    accidental same-coordinate alignments.  Components with constant W
    (lines have W = 0, and for instance circles have no flat points) are
    skipped.

    Both conditions only see the normal line, so the bad set is symmetric
    under v -> -v and the antipode of every hit is added; this is also how
    the parametrization's missing direction (-1, 0) enters, as a CirclePoint
    with t = None.  Returned in counterclockwise order: finite half-angle
    parameters ascending, then the antipode if present.
    """
    angles: List[AlgNumber] = []
    for c, _ in factor_bpoly(X.g):
        cx, cy = gradient(c)
        k0, k1, k2 = cy, cx * -2, -cy
        r1 = pencil_resultant(c, k0, k1, k2, 2, "s")
        r2 = pencil_resultant(c, k0, k1, k2, 1, "s")
        for r in (r1, r2):
            if r.is_zero():
                raise DegenerateStratifiedPointError(
                    f"normal-direction eliminant of {c} vanished identically")
            angles += _lc_roots(r)
        w = cy * cy * cx.d1() - cx * cy * cx.d2() * 2 + cx * cx * cy.d2()
        if w.is_constant():
            continue
        a1 = resultant_wrt(c, w, 2)
        a2 = resultant_wrt(c, w, 1)
        if a1.is_zero() or a2.is_zero():
            raise DegenerateStratifiedPointError(
                f"curvature of {c} vanishes along the whole component")
        if a1.degree < 1 or a2.degree < 1:
            continue
        route1 = _fold_route(r1, a1)
        route2 = _fold_route(r2, a2)
        angles += [t for t in route1
                   if any(cmp_values(t, u) == 0 for u in route2)]
    ts = dedup_sorted(sort_values(angles))
    pole = False
    closure = list(ts)
    for t in ts:
        if cmp_values(t, 0) == 0:
            pole = True
        else:
            closure.append(_neg_recip(t))
    finite = dedup_sorted(sort_values(closure))
    pts = [CirclePoint(DIRECTION_CIRCLE, t) for t in finite]
    if pole:
        pts.append(CirclePoint(DIRECTION_CIRCLE, None))
    return tuple(pts)


def _assert_direction_ok(v: Direction, bad: Sequence[CirclePoint]) -> None:
    t = v.t_value()
    for b in bad:
        hit = (t is None) if b.t is None else (
            t is not None and cmp_values(b.t, t) == 0)
        if hit:
            raise BadDirectionError(f"direction {v} is in the bad set")


# ----------------------------------------------------------------------------
# Morse summaries for linear functions
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearMorseSummary:
    """Critical data of v* on X at one level alpha, fully cross-checked.

    points, values and neg_indices are aligned: values[i] is the exact value
    v*(p_i) and neg_indices[i] the index of the opposite function -v* at the
    same point.  The chi fields hold chi(X cut by {v* <=/=/>= alpha}) and
    the link fields the chi of the links at infinity of the same three sets;
    chi_x / link_x are the uncut pair.  The relations between the two groups
    are asserted exactly at construction:

        chi_ge - chi_eq = sum of ind(v*) at points above alpha,
        chi_le - chi_eq = sum of ind(-v*) at points below alpha,
        chi_eq = chi_x - both sums,
        link_le = chi_x - total ind(v*),
        link_ge = chi_x - total ind(-v*),
        link_eq = 2 chi_x - link_x - both totals.
    """

    direction: Direction
    alpha: Fraction
    points: Tuple[StratCriticalPoint, ...]
    values: Tuple[AlgNumber, ...]
    neg_indices: Tuple[int, ...]
    sum_index_above: int
    sum_neg_index_below: int
    total_index: int
    total_neg_index: int
    chi_x: int
    chi_le: int
    chi_eq: int
    chi_ge: int
    link_x: int
    link_le: int
    link_eq: int
    link_ge: int


def linear_morse_summary(X: PlaneSet, v: Direction,
                         alpha: RatLike) -> LinearMorseSummary:
    """Morse bookkeeping of the direction function v* on X, split at alpha.

    The Euler characteristics come from the plane sweep and the circle
    machinery, the index sums from the stratified critical points of v* and
    -v*; every relation listed on LinearMorseSummary is asserted before the
    record is returned.  Raises BadDirectionError when v is in the bad set.
    """
    a = rat(alpha)
    _assert_direction_ok(v, bad_directions(X))
    vstar = v.linear(X.g.vars)
    pts = stratified_critical_points(X, vstar)
    neg_pts = stratified_critical_points(X, -vstar)
    if len(neg_pts) != len(pts):
        raise AssertionError("critical points of v* and -v* failed to pair up")
    neg_indices: List[int] = []
    for p in pts:
        for q in neg_pts:
            if (cmp_values(p.point.x, q.point.x) == 0
                    and cmp_values(p.point.y, q.point.y) == 0):
                neg_indices.append(q.index)
                break
        else:
            raise AssertionError(
                "critical points of v* and -v* failed to pair up")
    values = tuple(value_at(vstar, p.point.x, p.point.y) for p in pts)
    sum_above = sum(p.index for p, val in zip(pts, values)
                    if val.compare_rat(a) > 0)
    sum_below_neg = sum(k for k, val in zip(neg_indices, values)
                        if val.compare_rat(a) < 0)
    total = sum(p.index for p in pts)
    total_neg = sum(neg_indices)
    level = vstar - a
    chi_x = chi_set(X)
    chi_le = chi_set(X, [(level, (-1, 0))])
    chi_eq = chi_set(X, [(level, (0,))])
    chi_ge = chi_set(X, [(level, (0, 1))])
    link_x = link_set(X)
    link_le = link_set(X, [(level, (-1, 0))])
    link_eq = link_set(X, [(level, (0,))])
    link_ge = link_set(X, [(level, (0, 1))])
    relations = [
        (chi_ge - chi_eq == sum_above, "upper side against indices above"),
        (chi_le - chi_eq == sum_below_neg,
         "lower side against opposite indices below"),
        (chi_eq == chi_x - sum_above - sum_below_neg, "level from both sums"),
        (link_le == chi_x - total, "lower link against the index total"),
        (link_ge == chi_x - total_neg,
         "upper link against the opposite index total"),
        (link_eq == 2 * chi_x - link_x - total - total_neg,
         "level link combination"),
    ]
    for ok, label in relations:
        if not ok:
            raise AssertionError(
                f"morse relation failed on {X} for v = {v}, "
                f"alpha = {a}: {label}")
    return LinearMorseSummary(v, a, pts, values, tuple(neg_indices),
                              sum_above, sum_below_neg, total, total_neg,
                              chi_x, chi_le, chi_eq, chi_ge,
                              link_x, link_le, link_eq, link_ge)


# ----------------------------------------------------------------------------
# Gauss-Bonnet measure
# ----------------------------------------------------------------------------

def _atan_series_iv(q: Fraction, terms: int) -> Interval:
    """Alternating-series enclosure of atan(q) for 0 <= q <= 1/2."""
    if q == 0:
        return (Fraction(0), Fraction(0))
    partial = Fraction(0)
    power = q
    q2 = q * q
    prev: Optional[Fraction] = None
    lo = hi = Fraction(0)
    for k in range(terms):
        term = power / (2 * k + 1)
        partial = partial + term if k % 2 == 0 else partial - term
        if prev is not None:
            lo, hi = min(prev, partial), max(prev, partial)
        prev = partial
        power *= q2
    return (lo, hi)


def _atan_iv(q: Fraction, terms: int) -> Interval:
    """Rigorous rational enclosure of atan(q).

    Arguments above 1/2 are reduced into the fast series zone with
    atan(q) = atan(1/2) + atan((q - 1/2)/(1 + q/2)); the reduced argument
    shrinks geometrically, so the recursion is shallow for any q.
    """
    if q < 0:
        lo, hi = _atan_iv(-q, terms)
        return (-hi, -lo)
    if q <= Fraction(1, 2):
        return _atan_series_iv(q, terms)
    rest = _atan_iv((q - Fraction(1, 2)) / (1 + q / 2), terms)
    return iv_add(_atan_series_iv(Fraction(1, 2), terms), rest)


@lru_cache(maxsize=None)
def _pi_iv(terms: int) -> Interval:
    """Machin's formula: pi = 16 atan(1/5) - 4 atan(1/239)."""
    a5 = _atan_series_iv(Fraction(1, 5), terms)
    a239 = _atan_series_iv(Fraction(1, 239), terms)
    return iv_sub(iv_scale(a5, Fraction(16)), iv_scale(a239, Fraction(4)))


@dataclass
class DirectionArc:
    """One arc of the direction circle between consecutive bad directions."""

    sample: Fraction
    measure: Interval


def direction_arcs(X: PlaneSet, width: Fraction = Fraction(1, 2 ** 40),
                   terms: int = 32) -> List[DirectionArc]:
    """Partition of the direction circle cut by bad_directions(X).

    Each arc carries one rational half-angle parameter strictly inside it
    (per-arc quantities like the index sum are constant along the arc) and a
    rigorous angle-measure enclosure; the angle of parameter t is 2 atan(t),
    counterclockwise, with the antipode at the half-turn.  width bounds the
    parameter enclosures, terms the arctangent series length.
    """
    bad = bad_directions(X)
    pi = _pi_iv(terms)
    two_pi = iv_scale(pi, Fraction(2))
    finite = [b.t for b in bad if b.t is not None]
    if not finite:
        return [DirectionArc(Fraction(0), two_pi)]
    pole = len(finite) < len(bad)
    thetas: List[Interval] = []
    for t in finite:
        t.refine_to(width)
        lo, hi = t.interval
        thetas.append((2 * _atan_iv(lo, terms)[0], 2 * _atan_iv(hi, terms)[1]))
    seps = separating_rationals(finite)
    arcs = [DirectionArc(seps[i + 1], iv_sub(thetas[i + 1], thetas[i]))
            for i in range(len(finite) - 1)]
    if pole:
        arcs.append(DirectionArc(seps[-1], iv_sub(pi, thetas[-1])))
        arcs.insert(0, DirectionArc(seps[0], iv_add(pi, thetas[0])))
    else:
        arcs.append(DirectionArc(
            seps[-1], iv_add(iv_sub(two_pi, thetas[-1]), thetas[0])))
    return arcs


def _index_total(X: PlaneSet, v: Direction) -> int:
    return sum(p.index
               for p in stratified_critical_points(X, v.linear(X.g.vars)))


@dataclass
class DirectionSample:
    """An arc sample with its share of a size-n direction grid."""

    sample: Fraction
    count: int
    fraction: Interval


def direction_samples(X: PlaneSet, n: int,
                      tol: Optional[RatLike] = None) -> List[DirectionSample]:
    """n directions spread over the arcs proportionally to measure.

    Shares are assigned by largest remainder on the enclosed measure
    fractions, which are refined until their total width drops below tol
    (default 1/10^6); each sample parameter sits strictly inside its arc,
    so any per-arc-constant quantity is safe to evaluate there.
    """
    if n < 1:
        raise ValueError("a direction grid needs n >= 1")
    target = rat(tol) if tol is not None else Fraction(1, 10 ** 6)
    width, terms = Fraction(1, 2 ** 40), 32
    for _ in range(10):
        arcs = direction_arcs(X, width, terms)
        two_pi = iv_scale(_pi_iv(terms), Fraction(2))
        fracs = [iv_div(a.measure, two_pi) for a in arcs]
        if sum(f[1] - f[0] for f in fracs) <= target:
            break
        width /= 2 ** 16
        terms += 16
    mids = [(f[0] + f[1]) / 2 for f in fracs]
    share = [int(n * m) for m in mids]
    by_remainder = sorted(range(len(arcs)),
                          key=lambda i: (n * mids[i] - share[i], i),
                          reverse=True)
    for i in by_remainder[:max(0, n - sum(share))]:
        share[i] += 1
    if sum(share) != n:
        share[by_remainder[0]] += n - sum(share)
    return [DirectionSample(a.sample, k, f)
            for a, k, f in zip(arcs, share, fracs)]


def gauss_bonnet(X: PlaneSet, mode: str = "exact", n: int = 64,
                 tol: Optional[RatLike] = None) -> Tuple[Fraction, Fraction]:
    """Average of the total index of v* over all unit directions v.

    Returns (value, error bound), both rational.  The integrand is constant
    between consecutive bad directions, so the average is a finite sum of
    integers weighted by arc measures; the transcendental angles force the
    enclosure form.  Mode "exact" tightens the enclosures until the bound
    drops below tol (default 1/10^6), and reports exactly zero error when no
    direction is bad.  Mode "sampled" spreads n directions over the arcs
    proportionally to measure (largest remainder) and reports the
    discretization error bound; tol there only drives the measure
    enclosures.
    """
    target = rat(tol) if tol is not None else Fraction(1, 10 ** 6)
    if mode in ("exact", "exact-breakpoints"):
        if not bad_directions(X):
            return (Fraction(_index_total(X, Direction.from_t(0))),
                    Fraction(0))
        width, terms = Fraction(1, 2 ** 40), 32
        iotas: Optional[List[int]] = None
        for _ in range(14):
            arcs = direction_arcs(X, width, terms)
            if iotas is None:
                iotas = [_index_total(X, Direction.from_t(a.sample))
                         for a in arcs]
            two_pi = iv_scale(_pi_iv(terms), Fraction(2))
            total = (Fraction(0), Fraction(0))
            for arc, iota in zip(arcs, iotas):
                total = iv_add(total, iv_scale(iv_div(arc.measure, two_pi),
                                               Fraction(iota)))
            err = (total[1] - total[0]) / 2
            if err <= target:
                break
            width /= 2 ** 16
            terms += 16
        return ((total[0] + total[1]) / 2, err)
    if mode != "sampled":
        raise ValueError(f"mode must be 'exact' or 'sampled', got {mode!r}")
    if n < 1:
        raise ValueError("sampled mode needs n >= 1")
    if not bad_directions(X):
        return (Fraction(_index_total(X, Direction.from_t(0))), Fraction(0))
    samples = direction_samples(X, n, tol)
    iotas = [_index_total(X, Direction.from_t(s.sample)) for s in samples]
    value = Fraction(sum(s.count * i for s, i in zip(samples, iotas)), n)
    err = sum(abs(i) * max(abs(Fraction(s.count, n) - s.fraction[0]),
                           abs(Fraction(s.count, n) - s.fraction[1]))
              for s, i in zip(samples, iotas))
    return (value, err)
