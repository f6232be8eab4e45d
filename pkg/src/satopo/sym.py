"""Bridge to sympy for elimination-theoretic heavy lifting.

Everything that needs resultants, gcds, square-free decomposition, or
irreducible factorization over Q goes through this module; the rest of the
package never imports sympy directly.  sympy's resultant runs a fraction-free
subresultant PRS over ZZ, which is exactly the algorithm we want; tests
cross-check it against a hand-rolled Sylvester-determinant oracle.

All functions are cached where inputs are hashable, since the calling code
re-derives the same eliminants freely.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

import sympy as sp

from .bpoly import BPoly
from .upoly import UPoly

_SYMBOLS: dict = {}


def symbol(name: str) -> sp.Symbol:
    if name not in _SYMBOLS:
        _SYMBOLS[name] = sp.Symbol(name)
    return _SYMBOLS[name]


def _to_rational(c) -> Fraction:
    r = sp.Rational(c)
    return Fraction(int(r.p), int(r.q))


# ---- conversions -----------------------------------------------------------

def upoly_to_expr(p: UPoly, var: str | None = None) -> sp.Expr:
    v = symbol(var if var is not None else p.var)
    return sp.Add(*[sp.Rational(c.numerator, c.denominator) * v ** k
                    for k, c in enumerate(p.coeffs)])


def bpoly_to_expr(p: BPoly) -> sp.Expr:
    v1, v2 = symbol(p.vars[0]), symbol(p.vars[1])
    return sp.Add(*[sp.Rational(c.numerator, c.denominator) * v1 ** i * v2 ** j
                    for (i, j), c in p.terms])


def expr_to_upoly(expr: sp.Expr, var: str) -> UPoly:
    v = symbol(var)
    poly = sp.Poly(expr, v, domain="QQ")
    d: dict[int, Fraction] = {}
    for (k,), c in poly.as_dict().items():
        d[k] = _to_rational(c)
    n = max(d) + 1 if d else 0
    return UPoly.from_coeffs([d.get(k, Fraction(0)) for k in range(n)], var)


def expr_to_bpoly(expr: sp.Expr, vars: Tuple[str, str]) -> BPoly:
    v1, v2 = symbol(vars[0]), symbol(vars[1])
    poly = sp.Poly(expr, v1, v2, domain="QQ")
    return BPoly.from_dict(
        {(i, j): _to_rational(c) for (i, j), c in poly.as_dict().items()}, vars)


# ---- resultants -------------------------------------------------------------

def _res(ea: sp.Expr, eb: sp.Expr, v: sp.Symbol) -> sp.Expr:
    """Sylvester-determinant resultant of (ea, eb) w.r.t. v.

    sympy's ``resultant`` sorts its arguments by degree internally without
    the (-1)^(nm) transposition sign, so restore the convention by hand.
    """
    da, db = sp.degree(ea, v), sp.degree(eb, v)
    da = int(da) if da != -sp.oo else -1
    db = int(db) if db != -sp.oo else -1
    if da <= 0 and db <= 0:
        # neither involves v: empty Sylvester matrix (or a zero input)
        return sp.Integer(0) if da < 0 or db < 0 else sp.Integer(1)
    if da >= db:
        return sp.resultant(ea, eb, v)
    res = sp.resultant(eb, ea, v)
    return res if (da * db) % 2 == 0 else -res


@lru_cache(maxsize=None)
def resultant_wrt(a: BPoly, b: BPoly, which: int) -> UPoly:
    """Resultant of two bivariate polynomials w.r.t. variable 1 or 2.

    Returns a UPoly in the surviving variable.  Zero inputs give the zero
    polynomial; a vanishing resultant signals a shared factor involving the
    eliminated variable (or total degeneracy) and is returned as-is for the
    caller to interpret.
    """
    if a.is_zero() or b.is_zero():
        return UPoly.zero(a.vars[1] if which == 1 else a.vars[0])
    elim = symbol(a.vars[0] if which == 1 else a.vars[1])
    keep = a.vars[1] if which == 1 else a.vars[0]
    res = _res(bpoly_to_expr(a), bpoly_to_expr(b), elim)
    return expr_to_upoly(sp.expand(res), keep)


@lru_cache(maxsize=None)
def resultant_upoly(a: UPoly, b: UPoly) -> Fraction:
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    res = _res(upoly_to_expr(a), upoly_to_expr(b), symbol(a.var))
    return _to_rational(sp.nsimplify(res))


@lru_cache(maxsize=None)
def elim_with_param(a: BPoly, b: BPoly, which: int, param: str) -> BPoly:
    """Resultant_{v}(a, b - param) in (surviving var, param).

    ``which`` names the eliminated variable of the common (v1, v2) pair.
    This is the workhorse for level-set eliminants: with ``a`` the radial
    tangency curve and ``b`` the function, its leading coefficients in the
    surviving variable cut out the candidate asymptotic critical values.
    """
    elim = symbol(a.vars[0] if which == 1 else a.vars[1])
    keep = a.vars[1] if which == 1 else a.vars[0]
    t = symbol(param)
    res = _res(bpoly_to_expr(a), bpoly_to_expr(b) - t, elim)
    return expr_to_bpoly(sp.expand(res), (keep, param))


@lru_cache(maxsize=None)
def value_min_poly(p_x: UPoly, q_y: UPoly, s: BPoly, param: str = "z") -> UPoly:
    """T(z) = Res_x(p_x, Res_y(q_y, z - s(x, y))).

    T vanishes at every value s(xi, eta) where xi runs over roots of p_x and
    eta over roots of q_y; in particular the exact value of s at a certified
    solution is a root of T.  T is identically zero only if p_x or q_y is.
    """
    xs, ys = symbol(s.vars[0]), symbol(s.vars[1])
    z = symbol(param)
    inner = _res(upoly_to_expr(q_y, s.vars[1]), z - bpoly_to_expr(s), ys)
    outer = _res(upoly_to_expr(p_x, s.vars[0]), sp.expand(inner), xs)
    return expr_to_upoly(sp.expand(outer), param)


def resultant_exprs(a: sp.Expr, b: sp.Expr, elim: str) -> sp.Expr:
    """Raw expression-level resultant for module-specific eliminations."""
    return sp.expand(_res(a, b, symbol(elim)))


@lru_cache(maxsize=None)
def pencil_resultant(a: BPoly, b0: BPoly, b1: BPoly, b2: BPoly,
                     which: int, param: str) -> BPoly:
    """Res_v(a, b0 + b1 s + b2 s^2) for a curve family quadratic in s.

    Eliminates variable ``which`` of the shared (v1, v2) pair; the result
    lives in (surviving variable, param).  The rational parametrization of
    the unit circle makes direction conditions quadratic in the half-angle
    parameter, which is where these pencils come from.
    """
    elim = symbol(a.vars[0] if which == 1 else a.vars[1])
    keep = a.vars[1] if which == 1 else a.vars[0]
    s = symbol(param)
    pencil = (bpoly_to_expr(b0) + s * bpoly_to_expr(b1)
              + s ** 2 * bpoly_to_expr(b2))
    res = _res(bpoly_to_expr(a), sp.expand(pencil), elim)
    return expr_to_bpoly(sp.expand(res), (keep, param))


# ---- gcd / square-free / factorization ---------------------------------------

@lru_cache(maxsize=None)
def gcd_bpoly(a: BPoly, b: BPoly) -> BPoly:
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    g = sp.gcd(bpoly_to_expr(a), bpoly_to_expr(b))
    return expr_to_bpoly(sp.expand(g), a.vars)


@lru_cache(maxsize=None)
def exact_div_bpoly(a: BPoly, b: BPoly) -> BPoly:
    v1, v2 = symbol(a.vars[0]), symbol(a.vars[1])
    q, r = sp.div(bpoly_to_expr(a), bpoly_to_expr(b), v1, v2)
    if sp.expand(r) != 0:
        raise ValueError("bivariate division is not exact")
    return expr_to_bpoly(sp.expand(q), a.vars)


@lru_cache(maxsize=None)
def square_free_bpoly(a: BPoly) -> BPoly:
    """Primitive product of the distinct irreducible factors (content dropped)."""
    if a.is_zero() or a.is_constant():
        return a
    out = BPoly.const(1, a.vars)
    for base, _ in factor_bpoly(a):
        out = out * base
    return out.primitive()


@lru_cache(maxsize=None)
def factor_bpoly(a: BPoly) -> Tuple[Tuple[BPoly, int], ...]:
    """Non-constant irreducible factors over Q with multiplicities."""
    _, factors = sp.factor_list(bpoly_to_expr(a),
                                symbol(a.vars[0]), symbol(a.vars[1]))
    out = []
    for base, mult in factors:
        fb = expr_to_bpoly(sp.expand(base), a.vars)
        if not fb.is_constant():
            out.append((fb.primitive(), int(mult)))
    return tuple(out)


@lru_cache(maxsize=None)
def factor_upoly(p: UPoly) -> Tuple[Tuple[UPoly, int], ...]:
    """Non-constant irreducible factors over Q with multiplicities."""
    _, factors = sp.factor_list(upoly_to_expr(p), symbol(p.var))
    out = []
    for base, mult in factors:
        fb = expr_to_upoly(sp.expand(base), p.var)
        if fb.degree >= 1:
            out.append((fb.primitive(), int(mult)))
    return tuple(out)


def root_multiplicity(p: UPoly, factor: UPoly) -> int:
    for base, mult in factor_upoly(p):
        if base.coeffs == factor.coeffs:
            return mult
    raise ValueError("not a factor")
