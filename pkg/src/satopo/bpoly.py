"""Sparse bivariate polynomials over Q.

Terms are held in a dict mapping ``(i, j)`` exponent pairs to nonzero
Fractions, for variables named ``vars = (v1, v2)`` (usually ``("x", "y")``).
Elimination-heavy work (resultants, factoring) lives in :mod:`satopo.sym`;
this module keeps the ring arithmetic, evaluation, and substitutions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple

from .rational import Interval, RatLike, iv_add, iv_mul, iv_point, rat
from .upoly import UPoly

TermKey = Tuple[int, int]


@dataclass(frozen=True)
class BPoly:
    terms: Tuple[Tuple[TermKey, Fraction], ...]
    vars: Tuple[str, str] = ("x", "y")

    # ---- construction -----------------------------------------------------

    @staticmethod
    def from_dict(d: Mapping[TermKey, RatLike],
                  vars: Tuple[str, str] = ("x", "y")) -> "BPoly":
        items = []
        for key, val in d.items():
            v = rat(val)
            if v != 0:
                items.append((key, v))
        items.sort()
        return BPoly(tuple(items), vars)

    @staticmethod
    def zero(vars: Tuple[str, str] = ("x", "y")) -> "BPoly":
        return BPoly((), vars)

    @staticmethod
    def const(c: RatLike, vars: Tuple[str, str] = ("x", "y")) -> "BPoly":
        return BPoly.from_dict({(0, 0): rat(c)}, vars)

    @staticmethod
    def var1(vars: Tuple[str, str] = ("x", "y")) -> "BPoly":
        return BPoly.from_dict({(1, 0): 1}, vars)

    @staticmethod
    def var2(vars: Tuple[str, str] = ("x", "y")) -> "BPoly":
        return BPoly.from_dict({(0, 1): 1}, vars)

    @staticmethod
    def from_upoly(p: UPoly, position: int,
                   vars: Tuple[str, str] = ("x", "y")) -> "BPoly":
        """Embed a univariate polynomial as the first or second variable."""
        d: Dict[TermKey, Fraction] = {}
        for k, c in enumerate(p.coeffs):
            if c != 0:
                d[(k, 0) if position == 0 else (0, k)] = c
        return BPoly.from_dict(d, vars)

    def as_dict(self) -> Dict[TermKey, Fraction]:
        return dict(self.terms)

    # ---- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k, _ in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms[0][1] if self.terms else Fraction(0)

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(i + j for (i, j), _ in self.terms)

    @property
    def deg1(self) -> int:
        if not self.terms:
            return -1
        return max(i for (i, _), _ in self.terms)

    @property
    def deg2(self) -> int:
        if not self.terms:
            return -1
        return max(j for (_, j), _ in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        v1, v2 = self.vars
        parts = []
        for (i, j), c in sorted(self.terms, key=lambda t: (t[0][0] + t[0][1], t[0])):
            factors = []
            if i == 1:
                factors.append(v1)
            elif i > 1:
                factors.append(f"{v1}^{i}")
            if j == 1:
                factors.append(v2)
            elif j > 1:
                factors.append(f"{v2}^{j}")
            if not factors or abs(c) != 1:
                factors.insert(0, str(abs(c)))
            term = "*".join(factors)
            parts.append(("- " if c < 0 else "+ ") + term)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    # ---- ring operations ----------------------------------------------------

    def _coerce(self, other: "BPoly | UPoly | RatLike") -> "BPoly":
        if isinstance(other, BPoly):
            return other
        if isinstance(other, UPoly):
            pos = 0 if other.var == self.vars[0] else 1
            return BPoly.from_upoly(other, pos, self.vars)
        return BPoly.const(rat(other), self.vars)

    def __add__(self, other: "BPoly | UPoly | RatLike") -> "BPoly":
        o = self._coerce(other)
        d = self.as_dict()
        for k, v in o.terms:
            d[k] = d.get(k, Fraction(0)) + v
        return BPoly.from_dict(d, self.vars)

    __radd__ = __add__

    def __neg__(self) -> "BPoly":
        return BPoly(tuple((k, -v) for k, v in self.terms), self.vars)

    def __sub__(self, other: "BPoly | UPoly | RatLike") -> "BPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: RatLike) -> "BPoly":
        return (-self) + other

    def __mul__(self, other: "BPoly | UPoly | RatLike") -> "BPoly":
        if not isinstance(other, (BPoly, UPoly)):
            c = rat(other)
            if c == 0:
                return BPoly.zero(self.vars)
            return BPoly(tuple((k, v * c) for k, v in self.terms), self.vars)
        o = self._coerce(other)
        d: Dict[TermKey, Fraction] = {}
        for (i1, j1), c1 in self.terms:
            for (i2, j2), c2 in o.terms:
                k = (i1 + i2, j1 + j2)
                d[k] = d.get(k, Fraction(0)) + c1 * c2
        return BPoly.from_dict(d, self.vars)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BPoly":
        if n < 0:
            raise ValueError("negative power")
        out = BPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # ---- calculus -----------------------------------------------------------

    def d1(self) -> "BPoly":
        d: Dict[TermKey, Fraction] = {}
        for (i, j), c in self.terms:
            if i > 0:
                d[(i - 1, j)] = d.get((i - 1, j), Fraction(0)) + i * c
        return BPoly.from_dict(d, self.vars)

    def d2(self) -> "BPoly":
        d: Dict[TermKey, Fraction] = {}
        for (i, j), c in self.terms:
            if j > 0:
                d[(i, j - 1)] = d.get((i, j - 1), Fraction(0)) + j * c
        return BPoly.from_dict(d, self.vars)

    # ---- evaluation and substitution -----------------------------------------

    def __call__(self, x: RatLike, y: RatLike) -> Fraction:
        a, b = rat(x), rat(y)
        out = Fraction(0)
        for (i, j), c in self.terms:
            out += c * a ** i * b ** j
        return out

    def eval_box(self, box1: Interval, box2: Interval) -> Interval:
        """Range enclosure over a rectangle, by interval Horner in var2."""
        out = iv_point(0)
        for p in reversed(self.coeffs_in_2()):
            out = iv_add(iv_mul(out, box2), p.eval_interval(box1))
        return out

    def eval_1(self, x: RatLike) -> UPoly:
        """Substitute the first variable; univariate in the second."""
        a = rat(x)
        cs: Dict[int, Fraction] = {}
        for (i, j), c in self.terms:
            cs[j] = cs.get(j, Fraction(0)) + c * a ** i
        n = max(cs) + 1 if cs else 0
        return UPoly.from_coeffs([cs.get(k, Fraction(0)) for k in range(n)],
                                 self.vars[1])

    def eval_2(self, y: RatLike) -> UPoly:
        a = rat(y)
        cs: Dict[int, Fraction] = {}
        for (i, j), c in self.terms:
            cs[i] = cs.get(i, Fraction(0)) + c * a ** j
        n = max(cs) + 1 if cs else 0
        return UPoly.from_coeffs([cs.get(k, Fraction(0)) for k in range(n)],
                                 self.vars[0])

    def coeffs_in_2(self) -> List[UPoly]:
        """Coefficients as a polynomial in var2; entry j is a UPoly in var1."""
        rows: Dict[int, Dict[int, Fraction]] = {}
        for (i, j), c in self.terms:
            rows.setdefault(j, {})[i] = c
        n = max(rows) + 1 if rows else 0
        out = []
        for j in range(n):
            row = rows.get(j, {})
            m = max(row) + 1 if row else 0
            out.append(UPoly.from_coeffs(
                [row.get(k, Fraction(0)) for k in range(m)], self.vars[0]))
        return out

    def coeffs_in_1(self) -> List[UPoly]:
        rows: Dict[int, Dict[int, Fraction]] = {}
        for (i, j), c in self.terms:
            rows.setdefault(i, {})[j] = c
        n = max(rows) + 1 if rows else 0
        out = []
        for i in range(n):
            row = rows.get(i, {})
            m = max(row) + 1 if row else 0
            out.append(UPoly.from_coeffs(
                [row.get(k, Fraction(0)) for k in range(m)], self.vars[1]))
        return out

    def lc_in_2(self) -> UPoly:
        cs = self.coeffs_in_2()
        if not cs:
            raise ValueError("leading coefficient of zero polynomial")
        return cs[-1]

    def lc_in_1(self) -> UPoly:
        cs = self.coeffs_in_1()
        if not cs:
            raise ValueError("leading coefficient of zero polynomial")
        return cs[-1]

    def univariate(self) -> UPoly:
        """Convert when at most one variable actually occurs.

        A polynomial in var1 only converts to a UPoly in var1; same for var2.
        Constants convert in var1.  Raises if both variables occur.
        """
        if self.deg2 <= 0:
            cs: Dict[int, Fraction] = {i: c for (i, _), c in self.terms}
            n = max(cs) + 1 if cs else 0
            return UPoly.from_coeffs([cs.get(k, Fraction(0)) for k in range(n)],
                                     self.vars[0])
        if self.deg1 <= 0:
            cs = {j: c for (_, j), c in self.terms}
            n = max(cs) + 1 if cs else 0
            return UPoly.from_coeffs([cs.get(k, Fraction(0)) for k in range(n)],
                                     self.vars[1])
        raise ValueError("polynomial involves both variables")

    def substitute(self, p1: "BPoly", p2: "BPoly") -> "BPoly":
        """self(p1, p2) for polynomial arguments sharing a variable pair."""
        vars = p1.vars
        # Horner in var2 with precomputed powers of p1
        cs2 = self.coeffs_in_2()
        pow1: List[BPoly] = [BPoly.const(1, vars)]
        for _ in range(max((p.degree for p in cs2), default=0)):
            pow1.append(pow1[-1] * p1)
        out = BPoly.zero(vars)
        for coeff in reversed(cs2):
            layer = BPoly.zero(vars)
            for k, c in enumerate(coeff.coeffs):
                if c != 0:
                    layer = layer + pow1[k] * c
            out = out * p2 + layer
        return out

    def shear(self, m: int) -> "BPoly":
        """Substitute var1 -> var1 + m * var2 (a plane homeomorphism)."""
        if m == 0:
            return self
        x = BPoly.var1(self.vars) + BPoly.var2(self.vars) * m
        return self.substitute(x, BPoly.var2(self.vars))

    def translate(self, a1: RatLike, a2: RatLike) -> "BPoly":
        """self(var1 + a1, var2 + a2)."""
        x = BPoly.var1(self.vars) + rat(a1)
        y = BPoly.var2(self.vars) + rat(a2)
        return self.substitute(x, y)

    def top_form(self) -> "BPoly":
        """The homogeneous part of top total degree."""
        d = self.total_degree
        return BPoly(tuple((k, c) for k, c in self.terms if k[0] + k[1] == d),
                     self.vars)

    def with_vars(self, vars: Tuple[str, str]) -> "BPoly":
        return BPoly(self.terms, vars)

    def swap_vars(self) -> "BPoly":
        """Exchange the roles of the two variables."""
        return BPoly(tuple(sorted(((j, i), c) for (i, j), c in self.terms)),
                     (self.vars[1], self.vars[0]))

    def primitive(self) -> "BPoly":
        """Integer-primitive scalar multiple (sign preserved)."""
        if not self.terms:
            return self
        den = math.lcm(*[c.denominator for c in (v for _, v in self.terms)])
        nums = [int(v * den) for _, v in self.terms]
        g = math.gcd(*nums)
        return BPoly(tuple((k, Fraction(int(v * den) // g))
                           for k, v in self.terms), self.vars)


def gradient(f: BPoly) -> Tuple[BPoly, BPoly]:
    return f.d1(), f.d2()
