"""Independent oracles used to cross-check the library's primitives.

These deliberately take different routes than the implementation:

* resultants: Sylvester matrix + fraction-free Bareiss elimination over the
  polynomial ring (the library delegates to sympy's subresultant PRS),
* winding numbers: floating-point angle accumulation around the circle (the
  library counts exact sign crossings),
* root counting: sympy's real_roots.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List

from satopo.bpoly import BPoly
from satopo.upoly import UPoly


def _coeff_rows(p: BPoly, which: int) -> List[UPoly]:
    """Coefficient list of p in the eliminated variable, highest degree first."""
    cols = p.coeffs_in_1() if which == 1 else p.coeffs_in_2()
    return list(reversed(cols))


def bareiss_det(matrix: List[List[UPoly]], var: str) -> UPoly:
    n = len(matrix)
    if n == 0:
        return UPoly.const(1, var)
    m = [row[:] for row in matrix]
    sign = 1
    prev = UPoly.const(1, var)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return UPoly.zero(var)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = UPoly.zero(var)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_resultant(a: BPoly, b: BPoly, which: int) -> UPoly:
    """Resultant w.r.t. variable ``which`` via a Sylvester determinant."""
    keep_var = a.vars[1] if which == 1 else a.vars[0]
    pa = _coeff_rows(a, which)
    pb = _coeff_rows(b, which)
    n, m = len(pa) - 1, len(pb) - 1
    if n < 0 or m < 0:
        return UPoly.zero(keep_var)
    if n == 0 and m == 0:
        return UPoly.const(1, keep_var)
    size = n + m
    zero = UPoly.zero(keep_var)
    rows = []
    for i in range(m):
        rows.append([zero] * i + pa + [zero] * (size - n - 1 - i))
    for i in range(n):
        rows.append([zero] * i + pb + [zero] * (size - m - 1 - i))
    return bareiss_det(rows, keep_var)


def numeric_roots(p: UPoly) -> List[float]:
    import sympy as sp

    x = sp.Symbol(p.var)
    expr = sum(sp.Rational(c.numerator, c.denominator) * x ** k
               for k, c in enumerate(p.coeffs))
    return sorted(float(r) for r in sp.real_roots(expr, x))


def _eval_float(p: BPoly, x: float, y: float) -> float:
    return sum(float(c) * x ** i * y ** j for (i, j), c in p.terms)


def winding_angle_sweep(p: BPoly, q: BPoly, center, radius, samples=4096) -> int:
    """Degree of (p, q)/|(p, q)| on a circle, by accumulating angle steps."""
    cx, cy = float(center[0]), float(center[1])
    r = float(radius)
    total = 0.0
    prev = None
    for k in range(samples + 1):
        theta = 2 * math.pi * k / samples
        x = cx + r * math.cos(theta)
        y = cy + r * math.sin(theta)
        ang = math.atan2(_eval_float(q, x, y), _eval_float(p, x, y))
        if prev is not None:
            d = ang - prev
            while d > math.pi:
                d -= 2 * math.pi
            while d < -math.pi:
                d += 2 * math.pi
            total += d
        prev = ang
    return round(total / (2 * math.pi))
