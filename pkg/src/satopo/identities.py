"""Identity catalog: every relation the library can cross-check, with reports.

Each identity equates an Euler-characteristic side, computed by sweeping
level, sublevel and superlevel sets (plus links on certified far circles),
against an index side, computed from local degrees of the gradient, the
winding at infinity, asymptotic correction terms, or stratified critical
points.  The two sides share nothing beyond the exact arithmetic core, so
agreement is a genuine consistency check of both pipelines.

verify() never raises on an input that merely violates an identity's
hypotheses (a non-proper function, a positive-dimensional critical set, a
direction from the bad set): the report comes back with skipped_reason set
and no verdict.  Genuine computation failures still raise.

Identities with several displays (P4.3-LINKS checks three link relations at
once, T4.5-ALL four ladder sums) aggregate: the report passes only if every
display holds, lhs/rhs are the display sums when all agree and the first
mismatching pair otherwise, and the witnesses carry the full table.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .algnum import (AlgNumber, Value, as_algnum, cmp_values, merge_values,
                     separating_rationals, separation)
from .bpoly import BPoly
from .circle import degree_at_infinity
from .critical import (CriticalPoint, InfiniteCriticalSetError,
                       _level_tangency_values, critical_values,
                       fiber_arc_index, find_critical_points)
from .euler import chi, chi_at, sweep
from .infinity import (FLAVORS, DegenerateBasepointError, _tangency_bound,
                       generic_basepoint, half_branches, is_proper, jump_sets,
                       lambda_mu_nu, link_chi, link_counts_at, r_infinity)
from .rational import Interval, RatLike, iv_add, iv_div, iv_scale, rat
from .solve2 import InfiniteZeroSetError, value_at
from .strata import (BadDirectionError, DegenerateStratifiedPointError,
                     Direction, PlaneSet, _assert_direction_ok, _pi_iv,
                     bad_directions, direction_arcs, direction_samples,
                     chi_set, gauss_bonnet, link_set,
                     stratified_critical_points)
from .sym import square_free_bpoly


class IdentityId(Enum):
    """Stable names for the checkable identities."""

    KH_LOC_FIBER = "KH-LOC-FIBER"
    KH_LOC_LE = "KH-LOC-LE"
    KH_LOC_GE = "KH-LOC-GE"
    SEKALSKI = "SEKALSKI"
    T3_1_GE = "T3.1-GE"
    T3_1_LE = "T3.1-LE"
    C3_2_FIBER = "C3.2-FIBER"
    C3_2_DIFF = "C3.2-DIFF"
    C3_3 = "C3.3"
    C3_4 = "C3.4"
    P3_6_GE = "P3.6-GE"
    P3_6_LE = "P3.6-LE"
    C3_7_FIBER = "C3.7-FIBER"
    C3_7_DIFF = "C3.7-DIFF"
    P3_8_LE = "P3.8-LE"
    P3_8_GE = "P3.8-GE"
    C3_9 = "C3.9"
    T3_16 = "T3.16"
    T3_17 = "T3.17"
    C3_18 = "C3.18"
    P3_19 = "P3.19"
    T3_20 = "T3.20"
    T3_21_LE = "T3.21-LE"
    T3_21_GE = "T3.21-GE"
    C3_22 = "C3.22"
    P4_1_GE = "P4.1-GE"
    P4_1_LE = "P4.1-LE"
    C4_2_FIBER = "C4.2-FIBER"
    C4_2_DIFF = "C4.2-DIFF"
    P4_3_LINKS = "P4.3-LINKS"
    T4_4 = "T4.4"
    T4_5_ALL = "T4.5-ALL"
    P5_4_ALL = "P5.4-ALL"
    P5_5_ALL = "P5.5-ALL"
    T5_6 = "T5.6"
    T5_8 = "T5.8"


STATEMENTS: Dict[IdentityId, str] = {
    IdentityId.KH_LOC_FIBER: "chi of a nearby local fiber = 1 - local degree, on both sides of the critical value",
    IdentityId.KH_LOC_LE: "chi of the local sublevel half-ball = 1 - local degree",
    IdentityId.KH_LOC_GE: "chi of the local superlevel half-ball = 1 - local degree",
    IdentityId.SEKALSKI: "degree at infinity = 1 + branch jumps of the level curves across the eq jump set",
    IdentityId.T3_1_GE: "proper f: chi{f>=a} - chi{f=a} = sum of local degrees above a",
    IdentityId.T3_1_LE: "proper f: chi{f<=a} - chi(link{f<=a}) = sum of local degrees at or below a",
    IdentityId.C3_2_FIBER: "proper f: chi{f=a} = chi(plane) - degree sums off the level",
    IdentityId.C3_2_DIFF: "proper f: chi{f>=a} - chi{f<=a} = degrees above - degrees below",
    IdentityId.C3_3: "proper f: chi(link{f<=a}) = chi(plane) - all local degrees",
    IdentityId.C3_4: "proper f: 2 chi(X) - chi(link X) = total index of f plus total index of -f",
    IdentityId.P3_6_GE: "chi{f>=a} - chi{f=a} = degrees above + lambda(f,a)",
    IdentityId.P3_6_LE: "chi{f<=a} - chi{f=a} = degrees below + lambda(-f,-a)",
    IdentityId.C3_7_FIBER: "chi{f=a} = chi(plane) - degree sums off the level - both lambdas",
    IdentityId.C3_7_DIFF: "chi{f>=a} - chi{f<=a} = degree difference + lambda(f,a) - lambda(-f,-a)",
    IdentityId.P3_8_LE: "chi(link{f<=a}) = chi(plane) - all degrees - lambda(f,a) + mu(f,a)",
    IdentityId.P3_8_GE: "chi(link{f>=a}) = chi(plane) - all degrees - lambda(-f,-a) + mu(-f,-a)",
    IdentityId.C3_9: "chi(link{f=a}) = 2 chi(plane) - chi(link plane) - all degrees twice - both lambda/mu pairs",
    IdentityId.T3_16: "chi(plane) = all degrees + telescoping link sums of sublevel sets over the le jump set",
    IdentityId.T3_17: "chi(plane) = all degrees + telescoping link sums of superlevel sets over the ge jump set",
    IdentityId.C3_18: "2 chi(plane) - chi(link plane) = degrees twice + telescoping level-link sums over the eq jump set",
    IdentityId.P3_19: "chi of level/sublevel/superlevel sets is constant between consecutive jump or critical values",
    IdentityId.T3_20: "chi(plane) = degrees twice + telescoping level chi over all jump and critical values",
    IdentityId.T3_21_LE: "chi(plane) = all degrees + telescoping sublevel chi over all jump and critical values",
    IdentityId.T3_21_GE: "chi(plane) = all degrees + telescoping superlevel chi over all jump and critical values",
    IdentityId.C3_22: "telescoped chi{f>=.} - chi{f<=.} differences cancel",
    IdentityId.P4_1_GE: "chi{f>=a} - chi{f=a} = degrees above + lambda(f,a)",
    IdentityId.P4_1_LE: "chi{f<=a} - chi{f=a} = degrees below - mu(f,a)",
    IdentityId.C4_2_FIBER: "chi{f=a} = 1 - degrees off the level - lambda(f,a) + mu(f,a)",
    IdentityId.C4_2_DIFF: "chi{f>=a} - chi{f<=a} = degree difference + lambda(f,a) + mu(f,a)",
    IdentityId.P4_3_LINKS: "link chi of sub/superlevel/level sets from the degree at infinity and lambda/mu",
    IdentityId.T4_4: "degree at infinity accounts for the telescoping link sums over each jump set",
    IdentityId.T4_5_ALL: "degree at infinity accounts for the telescoping chi sums over jump and critical values",
    IdentityId.P5_4_ALL: "stratified Morse counts for a generic direction: level chi against index sums",
    IdentityId.P5_5_ALL: "stratified link relations for a generic direction: link chi against total indices",
    IdentityId.T5_6: "compact X: the curvature average equals chi(X)",
    IdentityId.T5_8: "closed X: the curvature average equals chi(X) minus half the link terms",
}

_X_IDS = frozenset({IdentityId.P5_4_ALL, IdentityId.P5_5_ALL,
                    IdentityId.T5_6, IdentityId.T5_8})
_PROPER_IDS = frozenset({IdentityId.T3_1_GE, IdentityId.T3_1_LE,
                         IdentityId.C3_2_FIBER, IdentityId.C3_2_DIFF,
                         IdentityId.C3_3, IdentityId.C3_4})
_ALPHA_IDS = frozenset({
    IdentityId.T3_1_GE, IdentityId.T3_1_LE, IdentityId.C3_2_FIBER,
    IdentityId.C3_2_DIFF, IdentityId.C3_3, IdentityId.P3_6_GE,
    IdentityId.P3_6_LE, IdentityId.C3_7_FIBER, IdentityId.C3_7_DIFF,
    IdentityId.P3_8_LE, IdentityId.P3_8_GE, IdentityId.C3_9,
    IdentityId.P4_1_GE, IdentityId.P4_1_LE, IdentityId.C4_2_FIBER,
    IdentityId.C4_2_DIFF, IdentityId.P4_3_LINKS, IdentityId.P5_4_ALL,
    IdentityId.P5_5_ALL})
_SEED_IDS = frozenset(i for i in IdentityId
                      if i not in _X_IDS
                      and i not in {IdentityId.KH_LOC_FIBER,
                                    IdentityId.KH_LOC_LE,
                                    IdentityId.KH_LOC_GE})

Num = Union[int, Fraction]
Display = Tuple[str, Num, Num]


class _Skip(Exception):
    """Raised by handlers when an identity's hypotheses fail on the input."""


_DEGENERATE = (InfiniteCriticalSetError, InfiniteZeroSetError,
               DegenerateStratifiedPointError, BadDirectionError,
               DegenerateBasepointError)


@dataclass
class IdentityReport:
    identity: IdentityId
    input: str
    lhs: Optional[Fraction]
    rhs: Optional[Fraction]
    passed: bool
    witnesses: Dict[str, object]
    skipped_reason: Optional[str] = None

    @property
    def skipped(self) -> bool:
        return self.skipped_reason is not None

    def to_dict(self) -> Dict[str, object]:
        return {
            "identity": self.identity.value,
            "input": self.input,
            "lhs": None if self.lhs is None else str(self.lhs),
            "rhs": None if self.rhs is None else str(self.rhs),
            "pass": self.passed,
            "witnesses": _jsonable(self.witnesses),
            "skipped_reason": self.skipped_reason,
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def line(self) -> str:
        if self.skipped:
            return f"SKIP {self.identity.value}: {self.skipped_reason} [{self.input}]"
        verdict = "PASS" if self.passed else "FAIL"
        return (f"{verdict} {self.identity.value}: lhs = {self.lhs}, "
                f"rhs = {self.rhs} [{self.input}]")


def _jsonable(v: object) -> object:
    if isinstance(v, bool) or v is None or isinstance(v, (int, str, float)):
        return v
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, AlgNumber):
        if v.is_rational():
            return str(v.as_rational())
        lo, hi = v.interval
        return {"approx": float(v), "interval": [str(lo), str(hi)]}
    if isinstance(v, dict):
        return {str(k): _jsonable(u) for k, u in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(u) for u in v]
    return str(v)


def _point_witness(p: CriticalPoint) -> Dict[str, object]:
    (xl, xh), (yl, yh) = p.box
    return {"box": [[str(xl), str(xh)], [str(yl), str(yh)]],
            "value": p.value, "degree": p.local_degree}


@lru_cache(maxsize=None)
def _points(f: BPoly) -> Tuple[CriticalPoint, ...]:
    return tuple(find_critical_points(f))


@lru_cache(maxsize=None)
def _base(f: BPoly, seed: int) -> Tuple[Fraction, Fraction]:
    return generic_basepoint(f, seed)


def _deg_split(f: BPoly, alpha: Fraction) -> Tuple[int, int, int]:
    """Local degree sums (above, at, below) a rational level."""
    above = at = below = 0
    for p in _points(f):
        c = p.value.compare_rat(alpha)
        if c > 0:
            above += p.local_degree
        elif c < 0:
            below += p.local_degree
        else:
            at += p.local_degree
    return above, at, below


def _level(f: BPoly, alpha: Fraction) -> BPoly:
    return f - BPoly.const(alpha, f.vars)


def _compact(X: PlaneSet) -> bool:
    """Whether X is bounded, certified through its boundary curve.

    A bounded real curve lies inside its own radial tangency bound, so a
    single far sign of g decides which side of a bounded boundary the
    region occupies.
    """
    if half_branches(X.g) != 0:
        return False
    if X.kind == "curve":
        return True
    radius = Fraction(int(_tangency_bound(square_free_bpoly(X.g),
                                          (Fraction(0), Fraction(0)))) + 1)
    return X.g(radius, Fraction(0)) > 0


# ---- report assembly -------------------------------------------------------------


def _finish(ident: IdentityId, desc: str, displays: Sequence[Display],
            witnesses: Dict[str, object]) -> IdentityReport:
    table = [{"display": lbl, "lhs": str(Fraction(l)), "rhs": str(Fraction(r)),
              "pass": Fraction(l) == Fraction(r)} for lbl, l, r in displays]
    wit = dict(witnesses)
    wit["displays"] = table
    bad = [(Fraction(l), Fraction(r)) for _, l, r in displays
           if Fraction(l) != Fraction(r)]
    if bad:
        lhs, rhs = bad[0]
        return IdentityReport(ident, desc, lhs, rhs, False, wit)
    lhs = Fraction(sum(Fraction(l) for _, l, _ in displays))
    rhs = Fraction(sum(Fraction(r) for _, _, r in displays))
    return IdentityReport(ident, desc, lhs, rhs, True, wit)


def _skip_report(ident: IdentityId, desc: str, reason: str) -> IdentityReport:
    return IdentityReport(ident, desc, None, None, False, {}, reason)


# ---- local identities ------------------------------------------------------------


def _kh_fiber(ident: IdentityId, desc: str, f: BPoly) -> IdentityReport:
    pts = _points(f)
    if not pts:
        return _finish(ident, desc, [],
                       {"note": "no critical points; vacuously true"})
    displays: List[Display] = []
    for i, p in enumerate(pts):
        for side, tag in ((-1, "below"), (1, "above")):
            arcs = 1 - fiber_arc_index(f, p, side)
            displays.append((f"point {i}, fiber {tag} the value",
                             arcs, 1 - p.local_degree))
    return _finish(ident, desc, displays,
                   {"critical_points": [_point_witness(p) for p in pts]})


def _half_ball_chi(f: BPoly, p: CriticalPoint, side: int) -> int:
    """chi of {f <=/>= f(p) -/+ delta} inside p's certified disk.

    Only meaningful at rational critical points, where the level offset can
    be made exactly rational; delta keeps every circle tangency value of f
    strictly outside the offset range, as in the fiber arc count.
    """
    fp = f(p.point.x.as_rational(), p.point.y.as_rational())
    c = p.circle
    for _ in range(10):
        tangency = _level_tangency_values(f, c)
        if tangency is None:
            tangency = [AlgNumber.from_rat(f(*c.point_at(0)))]
        if any(t.compare_rat(fp) == 0 for t in tangency):
            from .circle import Circle
            c = Circle(c.center, c.radius / 2)
            continue
        delta = min(separation(t, fp) for t in tangency) / 2
        level = fp + side * delta / 2
        x = BPoly.var1(f.vars)
        y = BPoly.var2(f.vars)
        disk = ((x - BPoly.const(c.center[0], f.vars)) ** 2
                + (y - BPoly.const(c.center[1], f.vars)) ** 2
                - BPoly.const(c.radius * c.radius, f.vars))
        signs = (-1, 0) if side < 0 else (0, 1)
        return sweep(((_level(f, level), signs), (disk, (-1, 0)))).chi_c
    raise _Skip("could not separate the critical value from the circle "
                "tangency values")


def _kh_half_ball(ident: IdentityId, desc: str, f: BPoly,
                  side: int) -> IdentityReport:
    pts = _points(f)
    rational = [p for p in pts if p.point.is_rational()]
    if pts and not rational:
        raise _Skip("no critical point has rational coordinates, so no "
                    "exactly rational level offset exists")
    if not pts:
        return _finish(ident, desc, [],
                       {"note": "no critical points; vacuously true"})
    displays: List[Display] = []
    for i, p in enumerate(rational):
        displays.append((f"point {i}", _half_ball_chi(f, p, side),
                         1 - p.local_degree))
    wit: Dict[str, object] = {
        "critical_points": [_point_witness(p) for p in rational]}
    if len(rational) < len(pts):
        wit["ignored_irrational_points"] = len(pts) - len(rational)
    return _finish(ident, desc, displays, wit)


# ---- proper family ---------------------------------------------------------------


def _proper_plane(ident: IdentityId, desc: str, f: BPoly, alpha: Fraction,
                  seed: int) -> IdentityReport:
    a = _base(f, seed)
    if not is_proper(f, a):
        raise _Skip("f is not proper: some level set is unbounded, the "
                    "properness hypothesis fails")
    above, at, below = _deg_split(f, alpha)
    wit: Dict[str, object] = {"basepoint": [a[0], a[1]],
                              "degrees": {"above": above, "at": at,
                                          "below": below}}
    if ident is IdentityId.T3_1_GE:
        lhs = chi(f, alpha, "ge") - chi(f, alpha, "eq")
        displays = [("chi(ge) - chi(eq)", lhs, above)]
    elif ident is IdentityId.T3_1_LE:
        lhs = chi(f, alpha, "le") - link_chi(f, alpha, "le")
        displays = [("chi(le) - link(le)", lhs, at + below)]
    elif ident is IdentityId.C3_2_FIBER:
        displays = [("chi(eq)", chi(f, alpha, "eq"), 1 - above - below)]
    elif ident is IdentityId.C3_2_DIFF:
        lhs = chi(f, alpha, "ge") - chi(f, alpha, "le")
        displays = [("chi(ge) - chi(le)", lhs, above - below)]
    elif ident is IdentityId.C3_3:
        displays = [("link(le)", link_chi(f, alpha, "le"),
                     1 - above - at - below)]
    else:
        displays = [("2 chi(plane) - chi(link plane)", 2,
                     2 * (above + at + below))]
    return _finish(ident, desc, displays, wit)


def _strat_values(X: PlaneSet, g: BPoly):
    pts = stratified_critical_points(X, g)
    return [(p, value_at(g, p.point.x, p.point.y)) for p in pts]


def _proper_strat(ident: IdentityId, desc: str, X: PlaneSet, f: BPoly,
                  alpha: Fraction) -> IdentityReport:
    if not _compact(X):
        raise _Skip("X is not compact, so properness of the restriction "
                    "is not certified here")
    pos = _strat_values(X, f)
    neg = _strat_values(X, -f)
    above = sum(p.index for p, v in pos if v.compare_rat(alpha) > 0)
    at_or_below = sum(p.index for p, v in pos if v.compare_rat(alpha) <= 0)
    total = sum(p.index for p, _ in pos)
    total_neg = sum(q.index for q, _ in neg)
    below_neg = sum(q.index for q, w in neg
                    if value_at(f, q.point.x, q.point.y).compare_rat(alpha) < 0)
    lvl = _level(f, alpha)
    chi_x = chi_set(X)
    wit: Dict[str, object] = {
        "indices": [{"stratum": p.stratum, "index": p.index, "value": v}
                    for p, v in pos],
        "chi_X": chi_x}
    if ident is IdentityId.T3_1_GE:
        lhs = chi_set(X, ((lvl, (0, 1)),)) - chi_set(X, ((lvl, (0,)),))
        displays = [("chi(ge) - chi(eq)", lhs, above)]
    elif ident is IdentityId.T3_1_LE:
        lhs = (chi_set(X, ((lvl, (-1, 0)),))
               - link_set(X, ((lvl, (-1, 0)),)))
        displays = [("chi(le) - link(le)", lhs, at_or_below)]
    elif ident is IdentityId.C3_2_FIBER:
        displays = [("chi(eq)", chi_set(X, ((lvl, (0,)),)),
                     chi_x - above - below_neg)]
    elif ident is IdentityId.C3_2_DIFF:
        lhs = chi_set(X, ((lvl, (0, 1)),)) - chi_set(X, ((lvl, (-1, 0)),))
        displays = [("chi(ge) - chi(le)", lhs, above - below_neg)]
    elif ident is IdentityId.C3_3:
        displays = [("link(le)", link_set(X, ((lvl, (-1, 0)),)),
                     chi_x - total)]
    else:
        displays = [("2 chi(X) - link(X)", 2 * chi_x - link_set(X),
                     total + total_neg)]
    return _finish(ident, desc, displays, wit)


# ---- jump-corrected level relations ----------------------------------------------


def _lambda_family(ident: IdentityId, desc: str, f: BPoly, alpha: Fraction,
                   seed: int) -> IdentityReport:
    a = _base(f, seed)
    lam, mu, _ = lambda_mu_nu(f, a, alpha)
    above, at, below = _deg_split(f, alpha)
    all_deg = above + at + below
    wit: Dict[str, object] = {"basepoint": [a[0], a[1]], "lambda": lam,
                              "mu": mu,
                              "degrees": {"above": above, "at": at,
                                          "below": below}}
    need_neg = ident in {IdentityId.P3_6_LE, IdentityId.C3_7_FIBER,
                         IdentityId.C3_7_DIFF, IdentityId.P3_8_GE,
                         IdentityId.C3_9}
    if need_neg:
        a_neg = _base(-f, seed)
        lam_neg, mu_neg, _ = lambda_mu_nu(-f, a_neg, -alpha)
        wit["lambda_neg"] = lam_neg
        wit["mu_neg"] = mu_neg
    if ident is IdentityId.P3_6_GE or ident is IdentityId.P4_1_GE:
        lhs = chi(f, alpha, "ge") - chi(f, alpha, "eq")
        displays = [("chi(ge) - chi(eq)", lhs, above + lam)]
    elif ident is IdentityId.P3_6_LE:
        lhs = chi(f, alpha, "le") - chi(f, alpha, "eq")
        displays = [("chi(le) - chi(eq)", lhs, below + lam_neg)]
    elif ident is IdentityId.P4_1_LE:
        lhs = chi(f, alpha, "le") - chi(f, alpha, "eq")
        displays = [("chi(le) - chi(eq)", lhs, below - mu)]
    elif ident is IdentityId.C3_7_FIBER:
        displays = [("chi(eq)", chi(f, alpha, "eq"),
                     1 - above - below - lam - lam_neg)]
    elif ident is IdentityId.C4_2_FIBER:
        displays = [("chi(eq)", chi(f, alpha, "eq"),
                     1 - above - below - lam + mu)]
    elif ident is IdentityId.C3_7_DIFF:
        lhs = chi(f, alpha, "ge") - chi(f, alpha, "le")
        displays = [("chi(ge) - chi(le)", lhs,
                     above + lam - below - lam_neg)]
    elif ident is IdentityId.C4_2_DIFF:
        lhs = chi(f, alpha, "ge") - chi(f, alpha, "le")
        displays = [("chi(ge) - chi(le)", lhs, above - below + lam + mu)]
    elif ident is IdentityId.P3_8_LE:
        displays = [("link(le)", link_chi(f, alpha, "le"),
                     1 - all_deg - lam + mu)]
    elif ident is IdentityId.P3_8_GE:
        displays = [("link(ge)", link_chi(f, alpha, "ge"),
                     1 - all_deg - lam_neg + mu_neg)]
    elif ident is IdentityId.C3_9:
        displays = [("link(eq)", link_chi(f, alpha, "eq"),
                     2 - 2 * all_deg - lam + mu - lam_neg + mu_neg)]
    else:
        deg_inf = degree_at_infinity(f)
        wit["degree_at_infinity"] = deg_inf
        rhs_half = 1 - deg_inf - lam + mu
        displays = [("link(le)", link_chi(f, alpha, "le"), rhs_half),
                    ("link(ge)", link_chi(f, alpha, "ge"), rhs_half),
                    ("link(eq)", link_chi(f, alpha, "eq"), 2 * rhs_half)]
    return _finish(ident, desc, displays, wit)


# ---- telescoping ladders over the jump sets --------------------------------------


def _ladder_terms(f: BPoly, a: Tuple[Fraction, Fraction],
                  values: Sequence[AlgNumber], flavor: str
                  ) -> Tuple[int, int, List[Fraction]]:
    """(sum over plateau samples, sum at the jump values, samples used)."""
    seps = separating_rationals(values)
    idx = {"eq": 0, "le": 1, "ge": 2}[flavor]
    at_samples = sum(link_chi(f, s, flavor) for s in seps)
    at_values = sum(link_counts_at(f, a, v)[idx] for v in values)
    return at_samples, at_values, seps


def _ladder_family(ident: IdentityId, desc: str, f: BPoly,
                   seed: int) -> IdentityReport:
    a = _base(f, seed)
    le, eq, ge = jump_sets(f, a)
    all_deg = sum(p.local_degree for p in _points(f))
    wit: Dict[str, object] = {
        "basepoint": [a[0], a[1]],
        "jump_values": {"le": list(le.values), "eq": list(eq.values),
                        "ge": list(ge.values)},
        "total_degree": all_deg}
    if ident is IdentityId.T3_16:
        sam, val, seps = _ladder_terms(f, a, le.values, "le")
        wit["samples"] = seps
        displays = [("chi(plane)", 1, all_deg + sam - val)]
    elif ident is IdentityId.T3_17:
        sam, val, seps = _ladder_terms(f, a, ge.values, "ge")
        wit["samples"] = seps
        displays = [("chi(plane)", 1, all_deg + sam - val)]
    elif ident is IdentityId.C3_18:
        sam, val, seps = _ladder_terms(f, a, eq.values, "eq")
        wit["samples"] = seps
        displays = [("2 chi(plane) - chi(link plane)", 2,
                     2 * all_deg + sam - val)]
    else:
        deg_inf = degree_at_infinity(f)
        wit["degree_at_infinity"] = deg_inf
        sam_le, val_le, _ = _ladder_terms(f, a, le.values, "le")
        sam_ge, val_ge, _ = _ladder_terms(f, a, ge.values, "ge")
        sam_eq, val_eq, _ = _ladder_terms(f, a, eq.values, "eq")
        displays = [("sublevel links", 1, deg_inf + sam_le - val_le),
                    ("superlevel links", 1, deg_inf + sam_ge - val_ge),
                    ("level links", 2, 2 * deg_inf + sam_eq - val_eq)]
    return _finish(ident, desc, displays, wit)


def _sekalski(desc: str, f: BPoly, seed: int) -> IdentityReport:
    a = _base(f, seed)
    _, eq, _ = jump_sets(f, a)
    seps = separating_rationals(eq.values)
    at_values = []
    for d in eq.values:
        if d.is_rational():
            at_values.append(r_infinity(_level(f, d.as_rational())))
        else:
            at_values.append(link_counts_at(f, a, d)[0] // 2)
    at_samples = [r_infinity(_level(f, s)) for s in seps]
    rhs = 1 + sum(at_values) - sum(at_samples)
    wit = {"basepoint": [a[0], a[1]], "jump_values": list(eq.values),
           "branches_at_values": at_values, "samples": seps,
           "branches_at_samples": at_samples}
    return _finish(IdentityId.SEKALSKI, desc,
                   [("degree at infinity", degree_at_infinity(f), rhs)], wit)


# ---- full bifurcation ladders ----------------------------------------------------


@lru_cache(maxsize=None)
def _btilde_data(f: BPoly, seed: int):
    """Jump-or-critical values, plateau samples, and chi at each, by flavor."""
    a = _base(f, seed)
    le, eq, ge = jump_sets(f, a)
    values = tuple(merge_values(critical_values(f), le.values, ge.values))
    seps = tuple(separating_rationals(values))
    at_samples = {fl: [chi(f, s, fl) for s in seps] for fl in FLAVORS}
    at_values = {fl: [chi_at(f, v, fl, a) for v in values] for fl in FLAVORS}
    return a, values, seps, at_samples, at_values


def _btilde_family(ident: IdentityId, desc: str, f: BPoly,
                   seed: int) -> IdentityReport:
    a, values, seps, at_samples, at_values = _btilde_data(f, seed)
    all_deg = sum(p.local_degree for p in _points(f))
    wit: Dict[str, object] = {"basepoint": [a[0], a[1]],
                              "values": list(values),
                              "samples": list(seps),
                              "total_degree": all_deg}
    sums_s = {fl: sum(at_samples[fl]) for fl in FLAVORS}
    sums_v = {fl: sum(at_values[fl]) for fl in FLAVORS}
    if ident is IdentityId.T3_20:
        displays = [("chi(plane)", 1,
                     2 * all_deg + sums_s["eq"] - sums_v["eq"])]
    elif ident is IdentityId.T3_21_LE:
        displays = [("chi(plane)", 1, all_deg + sums_s["le"] - sums_v["le"])]
    elif ident is IdentityId.T3_21_GE:
        displays = [("chi(plane)", 1, all_deg + sums_s["ge"] - sums_v["ge"])]
    elif ident is IdentityId.C3_22:
        lhs = (sums_s["ge"] - sums_s["le"]) - (sums_v["ge"] - sums_v["le"])
        rhs = sum(p.ind_f - p.ind_neg_f for p in _points(f))
        displays = [("telescoped chi differences", lhs, rhs)]
    else:
        deg_inf = degree_at_infinity(f)
        wit["degree_at_infinity"] = deg_inf
        displays = [
            ("level sets", 1, 2 * deg_inf + sums_s["eq"] - sums_v["eq"]),
            ("sublevel sets", 1, deg_inf + sums_s["le"] - sums_v["le"]),
            ("superlevel sets", 1, deg_inf + sums_s["ge"] - sums_v["ge"]),
            ("difference telescope", sums_s["ge"] - sums_s["le"],
             sums_v["ge"] - sums_v["le"])]
    return _finish(ident, desc, displays, wit)


def _plateau_probes(values: Sequence[AlgNumber], seps: Sequence[Fraction],
                    k: int) -> List[Fraction]:
    """Three rationals spread across the k-th plateau between the values."""
    s = seps[k]
    if not values:
        return [s, s - 1, s + 1]
    if k == 0:
        return [s, s - 1, s - 2]
    if k == len(seps) - 1:
        return [s, s + 1, s + 2]
    left, right = values[k - 1], values[k]
    while left.interval[1] >= s:
        left.refine_step()
    while right.interval[0] <= s:
        right.refine_step()
    return [s, (left.interval[1] + s) / 2, (s + right.interval[0]) / 2]


def _p319(desc: str, f: BPoly, seed: int) -> IdentityReport:
    a = _base(f, seed)
    le, eq, ge = jump_sets(f, a)
    values = merge_values(critical_values(f), le.values, ge.values)
    seps = separating_rationals(values)
    displays: List[Display] = []
    for k in range(len(seps)):
        probes = _plateau_probes(values, seps, k)
        for fl in FLAVORS:
            ref = chi(f, probes[0], fl)
            for s in probes[1:]:
                displays.append((f"plateau {k}, {fl} at {s}",
                                 chi(f, s, fl), ref))
    wit = {"basepoint": [a[0], a[1]], "values": list(values),
           "samples": list(seps)}
    return _finish(IdentityId.P3_19, desc, displays, wit)


# ---- stratified direction identities ---------------------------------------------


def _strat_direction(ident: IdentityId, desc: str, X: PlaneSet, v: Direction,
                     alpha: Fraction) -> IdentityReport:
    _assert_direction_ok(v, bad_directions(X))
    vstar = v.linear(X.g.vars)
    pos = _strat_values(X, vstar)
    neg = _strat_values(X, -vstar)
    total = sum(p.index for p, _ in pos)
    total_neg = sum(q.index for q, _ in neg)
    lvl = _level(vstar, alpha)
    chi_x = chi_set(X)
    wit: Dict[str, object] = {
        "chi_X": chi_x,
        "indices": [{"stratum": p.stratum, "index": p.index, "value": w}
                    for p, w in pos],
        "mirror_indices": [{"stratum": q.stratum, "index": q.index}
                           for q, _ in neg]}
    if ident is IdentityId.P5_4_ALL:
        above = sum(p.index for p, w in pos if w.compare_rat(alpha) > 0)
        below_neg = sum(q.index for q, _ in neg
                        if value_at(vstar, q.point.x, q.point.y)
                        .compare_rat(alpha) < 0)
        chi_le = chi_set(X, ((lvl, (-1, 0)),))
        chi_eq = chi_set(X, ((lvl, (0,)),))
        chi_ge = chi_set(X, ((lvl, (0, 1)),))
        displays = [("chi(ge) - chi(eq)", chi_ge - chi_eq, above),
                    ("chi(le) - chi(eq)", chi_le - chi_eq, below_neg),
                    ("chi(eq)", chi_eq, chi_x - above - below_neg)]
    else:
        link_x = link_set(X)
        wit["link_X"] = link_x
        displays = [("link(le)", link_set(X, ((lvl, (-1, 0)),)),
                     chi_x - total),
                    ("link(ge)", link_set(X, ((lvl, (0, 1)),)),
                     chi_x - total_neg),
                    ("link(eq)", link_set(X, ((lvl, (0,)),)),
                     2 * chi_x - link_x - total - total_neg)]
    return _finish(ident, desc, displays, wit)


def _snap(lo: Fraction, hi: Fraction) -> Fraction:
    """The simplest rational inside an enclosure, for readable reports."""
    mid = (lo + hi) / 2
    for digits in (0, 3, 6, 9, 12):
        cand = mid.limit_denominator(10 ** digits)
        if lo <= cand <= hi:
            return cand
    return mid


def _t56(desc: str, X: PlaneSet, tol: Optional[RatLike]) -> IdentityReport:
    if not _compact(X):
        raise _Skip("X is not compact; the compact total-curvature "
                    "identity does not apply")
    value, err = gauss_bonnet(X, "exact", tol=tol)
    rhs = Fraction(chi_set(X))
    passed = value == rhs if err == 0 else abs(value - rhs) <= err
    wit = {"curvature_average": value, "error_bound": err,
           "bad_directions": len(bad_directions(X))}
    return IdentityReport(IdentityId.T5_6, desc,
                          _snap(value - err, value + err), rhs, passed, wit)


def _t58_exact_rhs(X: PlaneSet, chi_x: int, link_x: int,
                   tol: Optional[RatLike]) -> Interval:
    """Enclosure of chi(X) - link(X)/2 - (average level link)/2."""
    base = Fraction(chi_x) - Fraction(link_x, 2)
    if not bad_directions(X):
        lk = link_set(X, ((Direction.from_t(0).linear(X.g.vars), (0,)),))
        exact = base - Fraction(lk, 2)
        return (exact, exact)
    target = rat(tol) if tol is not None else Fraction(1, 10 ** 6)
    width, terms = Fraction(1, 2 ** 40), 32
    links: Optional[List[int]] = None
    for _ in range(10):
        arcs = direction_arcs(X, width, terms)
        if links is None:
            links = [link_set(X, ((Direction.from_t(a.sample)
                                   .linear(X.g.vars), (0,)),))
                     for a in arcs]
        two_pi = iv_scale(_pi_iv(terms), Fraction(2))
        acc = (Fraction(0), Fraction(0))
        for arc, lk in zip(arcs, links):
            acc = iv_add(acc, iv_scale(iv_div(arc.measure, two_pi),
                                       Fraction(lk)))
        if acc[1] - acc[0] <= target:
            break
        width /= 2 ** 16
        terms += 16
    return (base - acc[1] / 2, base - acc[0] / 2)


def _t58(desc: str, X: PlaneSet, mode: str, n: int,
         tol: Optional[RatLike]) -> IdentityReport:
    chi_x = chi_set(X)
    link_x = link_set(X)
    if mode in ("exact", "exact-breakpoints"):
        value, err = gauss_bonnet(X, "exact", tol=tol)
        lo, hi = _t58_exact_rhs(X, chi_x, link_x, tol)
        rhs_mid = (lo + hi) / 2
        bound = err + (hi - lo) / 2
        passed = value == rhs_mid if bound == 0 \
            else abs(value - rhs_mid) <= bound
        wit = {"mode": "exact", "chi_X": chi_x, "link_X": link_x,
               "error_bound": bound}
        return IdentityReport(IdentityId.T5_8, desc,
                              _snap(value - err, value + err),
                              _snap(lo, hi), passed, wit)
    if mode != "sampled":
        raise ValueError(f"mode must be 'exact' or 'sampled', got {mode!r}")
    bound = rat(tol) if tol is not None else Fraction(1, 100)
    if not bad_directions(X):
        samples = [(Fraction(0), n)]
    else:
        samples = [(s.sample, s.count)
                   for s in direction_samples(X, n, Fraction(1, 10 ** 9))]
    rows = []
    lhs_total = Fraction(0)
    link_avg = Fraction(0)
    for t, count in samples:
        if count == 0:
            continue
        vstar = Direction.from_t(t).linear(X.g.vars)
        iota = sum(p.index for p in stratified_critical_points(X, vstar))
        lk = link_set(X, ((vstar, (0,)),))
        lhs_total += Fraction(count * iota, n)
        link_avg += Fraction(count * lk, n)
        rows.append({"t": t, "count": count, "iota": iota, "level_link": lk})
    rhs = Fraction(chi_x) - Fraction(link_x, 2) - link_avg / 2
    passed = abs(lhs_total - rhs) <= bound
    wit = {"mode": "sampled", "n": n, "bound": bound, "chi_X": chi_x,
           "link_X": link_x, "samples": rows}
    return IdentityReport(IdentityId.T5_8, desc, lhs_total, rhs, passed, wit)


# ---- dispatcher ------------------------------------------------------------------


def _describe(ident: IdentityId, f: Optional[BPoly], X: Optional[PlaneSet],
              v: Optional[Direction], alpha: Fraction, seed: int,
              mode: str, n: int) -> str:
    parts: List[str] = []
    if X is not None:
        parts.append(f"X = {X}")
    if f is not None:
        parts.append(f"f = {f}")
    if v is not None:
        parts.append(f"v = {v}")
    if ident in _ALPHA_IDS:
        parts.append(f"alpha = {alpha}")
    if ident in _SEED_IDS and X is None:
        parts.append(f"seed = {seed}")
    if ident is IdentityId.T5_8:
        parts.append(f"mode = {mode}" + (f"; n = {n}" if mode == "sampled"
                                         else ""))
    return "; ".join(parts)


def verify(identity: Union[IdentityId, str], f: Optional[BPoly] = None,
           X: Optional[PlaneSet] = None, v: Optional[Direction] = None,
           alpha: RatLike = 0, seed: int = 0, mode: str = "sampled",
           n: int = 64, tol: Optional[RatLike] = None) -> IdentityReport:
    """Check one identity on one input and report both sides.

    f-based identities take a polynomial (the ambient set is the whole
    plane); T3.1 through C3.4 also accept a PlaneSet X with f restricted to
    it when X is compact.  P5.4/P5.5 take (X, v, alpha); T5.6 and T5.8 take
    X alone, with mode/n/tol controlling the curvature average.  Hypothesis
    violations come back as skipped reports, never as silent passes.
    """
    ident = identity if isinstance(identity, IdentityId) \
        else IdentityId(str(identity))
    al = rat(alpha)
    desc = _describe(ident, f, X, v, al, seed, mode, n)
    try:
        if ident is IdentityId.T5_6 or ident is IdentityId.T5_8:
            if X is None:
                raise ValueError(f"{ident.value} needs a PlaneSet input")
            if ident is IdentityId.T5_6:
                return _t56(desc, X, tol)
            return _t58(desc, X, mode, n, tol)
        if ident in (IdentityId.P5_4_ALL, IdentityId.P5_5_ALL):
            if X is None or v is None:
                raise ValueError(f"{ident.value} needs a PlaneSet and a "
                                 "direction")
            return _strat_direction(ident, desc, X, v, al)
        if f is None:
            raise ValueError(f"{ident.value} needs a polynomial input")
        if f.is_constant():
            raise _Skip("constant input: every level set is empty or the "
                        "whole plane, nothing to compare")
        if ident in _PROPER_IDS:
            if X is not None:
                return _proper_strat(ident, desc, X, f, al)
            return _proper_plane(ident, desc, f, al, seed)
        if X is not None:
            raise ValueError(f"{ident.value} does not take a PlaneSet")
        if ident is IdentityId.KH_LOC_FIBER:
            return _kh_fiber(ident, desc, f)
        if ident is IdentityId.KH_LOC_LE:
            return _kh_half_ball(ident, desc, f, -1)
        if ident is IdentityId.KH_LOC_GE:
            return _kh_half_ball(ident, desc, f, 1)
        if ident is IdentityId.SEKALSKI:
            return _sekalski(desc, f, seed)
        if ident in (IdentityId.T3_16, IdentityId.T3_17, IdentityId.C3_18,
                     IdentityId.T4_4):
            return _ladder_family(ident, desc, f, seed)
        if ident is IdentityId.P3_19:
            return _p319(desc, f, seed)
        if ident in (IdentityId.T3_20, IdentityId.T3_21_LE,
                     IdentityId.T3_21_GE, IdentityId.C3_22,
                     IdentityId.T4_5_ALL):
            return _btilde_family(ident, desc, f, seed)
        return _lambda_family(ident, desc, f, al, seed)
    except _Skip as s:
        return _skip_report(ident, desc, str(s))
    except _DEGENERATE as e:
        return _skip_report(ident, desc,
                            f"hypothesis violation ({type(e).__name__}): {e}")


def applicable_identities(kind: str) -> Tuple[IdentityId, ...]:
    """The identities the corpus runner applies to an input of this kind."""
    if kind == "poly":
        return tuple(i for i in IdentityId if i not in _X_IDS)
    if kind in ("region", "curve"):
        return tuple(sorted(_X_IDS, key=lambda i: i.value))
    raise ValueError(f"unknown input kind {kind!r}")
