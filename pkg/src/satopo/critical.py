"""Critical points of a plane polynomial: boxes, degrees, values, indices.

The zeros of the gradient are found with the certified bivariate solver, each
gets a separating circle (reused both for its local degree and for the
fiber-counting cross-check below), and critical values come out as exact
algebraic numbers.

In the plane the index of f at an isolated critical point and the index of
-f coincide, and both equal the local degree of the gradient, so the
CriticalPoint record carries one integer.  ``fiber_arc_index`` recomputes
that integer by an independent route: count the arcs of a nearby level curve
inside the separating circle; one minus the arc count must reproduce the
degree whichever side of the critical value the level is taken on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .algnum import AlgNumber, dedup_sorted, separation, sort_values
from .bpoly import BPoly, gradient
from .circle import (Circle, CirclePoint, VanishesOnCircleError,
                     circle_profile, compose, separating_circle,
                     value_on_circle, winding_number)
from .rational import Interval
from .solve2 import InfiniteZeroSetError, PlanePoint, common_zeros, value_at


class InfiniteCriticalSetError(InfiniteZeroSetError):
    """The critical set of f is not finite."""


class DegenerateCrossCheckError(RuntimeError):
    """No level close to the critical value separates cleanly on any circle."""


@dataclass
class CriticalPoint:
    point: PlanePoint
    value: AlgNumber
    local_degree: int
    circle: Circle

    @property
    def box(self) -> Tuple[Interval, Interval]:
        return self.point.box()

    @property
    def ind_f(self) -> int:
        return self.local_degree

    @property
    def ind_neg_f(self) -> int:
        return self.local_degree

    def __repr__(self) -> str:
        return (f"CriticalPoint({self.point!r}, value~{float(self.value):.6g}, "
                f"degree={self.local_degree})")


def find_critical_points(f: BPoly) -> List[CriticalPoint]:
    """All real zeros of grad f, certified, with degrees and exact values."""
    fx, fy = gradient(f)
    if fx.is_zero() and fy.is_zero():
        raise InfiniteCriticalSetError("f is constant, every point is critical")
    if fx.is_zero() or fy.is_zero():
        # f depends on one variable only; its critical set is a union of lines
        u = (fy if fx.is_zero() else fx).univariate()
        if not u.is_constant() and u.count_real_roots() > 0:
            raise InfiniteCriticalSetError("critical set contains whole lines")
        return []
    try:
        zeros = common_zeros(fx, fy)
    except InfiniteZeroSetError as e:
        raise InfiniteCriticalSetError(str(e)) from e
    coords = [(z.x, z.y) for z in zeros]
    out = []
    for i, z in enumerate(zeros):
        c = separating_circle(coords[i], coords[:i] + coords[i + 1:])
        out.append(CriticalPoint(point=z,
                                 value=value_at(f, z.x, z.y),
                                 local_degree=winding_number(fx, fy, c),
                                 circle=c))
    return out


def index(f: BPoly, p: CriticalPoint) -> int:
    """ind(f, R^2, p): in the plane this is the local degree of grad f."""
    return p.local_degree


def critical_values(f: BPoly) -> List[AlgNumber]:
    """Sorted distinct critical values of f."""
    return dedup_sorted(sort_values([p.value for p in find_critical_points(f)]))


def _level_tangency_values(f: BPoly, c: Circle) -> Optional[List[AlgNumber]]:
    """f at the points of the circle where a level curve of f is tangent.

    Returns None when the gradient is radial along the whole circle (then f
    is constant on it and the caller treats that constant as the only event).
    """
    x, y = BPoly.var1(f.vars), BPoly.var2(f.vars)
    fx, fy = gradient(f)
    h = (x - c.center[0]) * fy - (y - c.center[1]) * fx
    n_h, _ = compose(h, c)
    if n_h.is_zero():
        return None
    prof = circle_profile([h], c)
    # f restricted to the circle attains extrema, and those are tangencies
    assert prof.events, "nonconstant restriction with no tangency events"
    return [value_on_circle(f, e.point) for e in prof.events]


def fiber_arc_index(f: BPoly, p: CriticalPoint, side: int) -> int:
    """1 - (arc count of a level curve just beside the critical value).

    side=-1 counts the arcs of {f = f(p) - delta} inside p's circle, side=+1
    those of {f = f(p) + delta}; both must equal the local degree.  delta is
    half the smallest gap from f(p) to a tangency value on the circle, so the
    level meets the circle transversally and each arc crosses it twice.  If a
    tangency value collides with f(p) exactly the circle is shrunk.
    """
    if side not in (-1, 1):
        raise ValueError("side must be -1 or +1")
    c = p.circle
    for _ in range(10):
        tangency = _level_tangency_values(f, c)
        if tangency is None:
            tangency = [AlgNumber.from_rat(f(*c.point_at(0)))]
        gaps = []
        collision = False
        for v in tangency:
            if v.compare(p.value) == 0:
                collision = True
                break
            gaps.append(separation(v, p.value))
        if collision:
            c = Circle(c.center, c.radius / 2)
            continue
        delta = min(gaps) / 2
        p.value.refine_to(delta / 4)
        lo, hi = p.value.interval
        level = (lo - delta / 4) if side < 0 else (hi + delta / 4)
        try:
            prof = circle_profile([f - level], c)
        except VanishesOnCircleError:
            c = Circle(c.center, c.radius / 2)
            continue
        assert all(prof.sign_change(i, 0) != 0 for i in range(len(prof.events)))
        crossings = len(prof.events)
        assert crossings % 2 == 0
        return 1 - crossings // 2
    raise DegenerateCrossCheckError(
        f"level tangency keeps hitting the critical value near {p.point!r}")
