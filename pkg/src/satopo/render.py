"""Level-curve pictures of polynomials and stratified sets, as SVG.

Everything in this module is display-only.  Coordinates are float
approximations of the certified boxes and algebraic values; nothing drawn
here flows back into the exact pipeline.  The Agg backend keeps the module
usable headless.
"""

from __future__ import annotations

import io
from typing import List, Optional, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.lines import Line2D  # noqa: E402
from matplotlib.patches import Circle as CirclePatch  # noqa: E402

from .algnum import AlgNumber, cmp_values, merge_values
from .bpoly import BPoly
from .critical import InfiniteCriticalSetError, find_critical_points
from .infinity import (DegenerateBasepointError, RadiusNotCertifiedError,
                       StabilizationError, certified_radius, gamma_polynomial,
                       generic_basepoint, jump_sets)
from .strata import (DegenerateStratifiedPointError, PlaneSet,
                     stratified_critical_points)

_GRID = 481

_INFINITY_ERRORS = (DegenerateBasepointError, RadiusNotCertifiedError,
                    StabilizationError)


def _float_eval(p: BPoly, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    out = np.zeros_like(xs)
    for (i, j), c in p.terms:
        out = out + float(c) * xs ** i * ys ** j
    return out


def _grid(cx: float, cy: float, half: float):
    xs = np.linspace(cx - half, cx + half, _GRID)
    ys = np.linspace(cy - half, cy + half, _GRID)
    return np.meshgrid(xs, ys)


def _contour_at(ax, xg, yg, vals, level: float, **kw) -> None:
    # matplotlib rejects a contour level outside the sampled range; a level
    # curve that misses the window is simply not drawn.
    if vals.min() < level < vals.max():
        ax.contour(xg, yg, vals, levels=[level], **kw)


def _fmt(v: float) -> str:
    return f"{v:.4g}"


def _poly_figure(f: BPoly, seed: int):
    if f.is_constant():
        raise ValueError("constant polynomial has no level-curve geometry")

    points: Sequence = ()
    infinite_critical = False
    try:
        points = find_critical_points(f)
    except InfiniteCriticalSetError:
        infinite_critical = True

    ax_, ay_ = 0.0, 0.0
    crit_vals: List[AlgNumber] = merge_values([p.value for p in points])
    asym_vals: List[AlgNumber] = []
    radius: Optional[float] = None
    gamma: Optional[BPoly] = None
    if not infinite_critical:
        try:
            a = generic_basepoint(f, seed)
            ax_, ay_ = float(a[0]), float(a[1])
            le, eq, ge = jump_sets(f, a)
            asym_vals = merge_values(le.values, eq.values, ge.values)
            radius = float(certified_radius(f, a))
            gamma = gamma_polynomial(f, a).h
        except _INFINITY_ERRORS:
            pass

    half = 2.5
    if radius is not None:
        half = 1.2 * radius + 0.5
    for p in points:
        (xlo, xhi), (ylo, yhi) = p.box
        half = max(half, 1.3 * abs(float(xlo) - ax_), 1.3 * abs(float(xhi) - ax_),
                   1.3 * abs(float(ylo) - ay_), 1.3 * abs(float(yhi) - ay_))

    fig, ax = plt.subplots(figsize=(6.4, 6.4))
    xg, yg = _grid(ax_, ay_, half)
    fv = _float_eval(f, xg, yg)

    handles = []
    drawn_crit = drawn_asym = False
    for v in merge_values(crit_vals, asym_vals):
        is_asym = any(cmp_values(v, w) == 0 for w in asym_vals)
        if is_asym:
            _contour_at(ax, xg, yg, fv, float(v), colors="crimson",
                        linestyles="dashed", linewidths=1.2)
            ax.text(ax_ - half * 0.96, ay_ + half * (0.9 - 0.08 * len(handles)),
                    f"asymptotic value {_fmt(float(v))}", color="crimson",
                    fontsize=8)
            drawn_asym = True
        else:
            _contour_at(ax, xg, yg, fv, float(v), colors="steelblue",
                        linewidths=1.2)
            drawn_crit = True
        handles.append(v)
    if not handles:
        _contour_at(ax, xg, yg, fv, 0.0, colors="gray", linewidths=1.0)

    if gamma is not None:
        gv = _float_eval(gamma, xg, yg)
        _contour_at(ax, xg, yg, gv, 0.0, colors="darkgreen",
                    linestyles="dotted", linewidths=1.0)
    if radius is not None:
        ax.add_patch(CirclePatch((ax_, ay_), radius, fill=False,
                                 linestyle="--", color="gray", linewidth=1.0))

    for p in points:
        px, py = float(p.point.x), float(p.point.y)
        ax.plot([px], [py], "ko", markersize=4)
        ax.annotate(f"deg {p.local_degree}", (px, py), textcoords="offset points",
                    xytext=(5, 5), fontsize=8)

    legend = []
    if drawn_crit:
        legend.append(Line2D([], [], color="steelblue", label="critical level"))
    if drawn_asym:
        legend.append(Line2D([], [], color="crimson", linestyle="--",
                             label="asymptotic level"))
    if gamma is not None:
        legend.append(Line2D([], [], color="darkgreen", linestyle=":",
                             label="radial tangency curve"))
    if radius is not None:
        legend.append(Line2D([], [], color="gray", linestyle="--",
                             label="certified circle"))
    if legend:
        ax.legend(handles=legend, loc="lower left", fontsize=8)

    title = f"f = {f}"
    if infinite_critical:
        title += "  (critical set not finite)"
    ax.set_title(title)
    ax.set_aspect("equal")
    ax.set_xlim(ax_ - half, ax_ + half)
    ax.set_ylim(ay_ - half, ay_ + half)
    return fig


def _set_figure(X: PlaneSet, vstar: Optional[BPoly]):
    if vstar is None:
        vstar = BPoly.var1(X.g.vars)

    points: Sequence = ()
    degenerate = False
    try:
        points = stratified_critical_points(X, vstar)
    except (DegenerateStratifiedPointError, InfiniteCriticalSetError):
        degenerate = True

    half = 2.5
    for p in points:
        (xlo, xhi), (ylo, yhi) = p.box
        half = max(half, 1.3 * abs(float(xlo)), 1.3 * abs(float(xhi)),
                   1.3 * abs(float(ylo)), 1.3 * abs(float(yhi)))

    fig, ax = plt.subplots(figsize=(6.4, 6.4))
    xg, yg = _grid(0.0, 0.0, half)
    gv = _float_eval(X.g, xg, yg)

    if X.kind == "region" and gv.min() < 0:
        ax.contourf(xg, yg, gv, levels=[float(gv.min()) - 1.0, 0.0],
                    colors=["steelblue"], alpha=0.2)
    _contour_at(ax, xg, yg, gv, 0.0, colors="steelblue", linewidths=1.4)

    for p in points:
        px, py = float(p.point.x), float(p.point.y)
        marker = "ks" if p.stratum == "boundary" else "ko"
        ax.plot([px], [py], marker, markersize=5)
        ax.annotate(f"ind {p.index}", (px, py), textcoords="offset points",
                    xytext=(5, 5), fontsize=8)

    title = f"X = {X},  v* = {vstar}"
    if degenerate:
        title += "  (critical points of v* not isolated)"
    ax.set_title(title)
    ax.set_aspect("equal")
    ax.set_xlim(-half, half)
    ax.set_ylim(-half, half)
    return fig


def render_svg(f: Optional[BPoly] = None, X: Optional[PlaneSet] = None, *,
               seed: int = 0, vstar: Optional[BPoly] = None) -> str:
    """An SVG document showing f's level-curve geometry or the set X.

    For a polynomial: level curves through every critical and asymptotic
    value (the latter dashed and labelled), critical points tagged with
    their local gradient degree, the radial tangency curve, and the circle
    beyond which the restriction data has stabilized.  For a set: the region
    or curve itself plus the critical points of v* (default x) with indices.
    """
    if (f is None) == (X is None):
        raise ValueError("pass exactly one of f and X")
    fig = _poly_figure(f, seed) if f is not None else _set_figure(X, vstar)
    buf = io.StringIO()
    try:
        fig.savefig(buf, format="svg")
    finally:
        plt.close(fig)
    return buf.getvalue()
