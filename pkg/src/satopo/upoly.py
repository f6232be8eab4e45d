"""Dense univariate polynomials over Q with Sturm-based root certification.

The representation is a trailing-zero-stripped tuple of Fractions, low degree
first.  The zero polynomial is the empty tuple and has degree -1.

Root counting follows the half-open convention internally: with sign
variations computed on zero-dropped Sturm sequences, ``V(a) - V(b)`` equals
the number of distinct roots in ``(a, b]`` even when an endpoint is itself a
root.  The public ``sturm_count`` keeps the stricter contract (open interval,
errors on endpoint roots) because callers are expected to nudge endpoints
explicitly rather than rely on a convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Tuple

from .rational import Interval, Rat, RatLike, iv_add, iv_mul, iv_point, rat, sign


class EndpointRootError(ValueError):
    """An interval endpoint is a root where the contract forbids it."""


@dataclass(frozen=True)
class UPoly:
    """A univariate polynomial with exact rational coefficients."""

    coeffs: Tuple[Fraction, ...]
    var: str = "x"

    # ---- construction -----------------------------------------------------

    @staticmethod
    def from_coeffs(coeffs: Iterable[RatLike], var: str = "x") -> "UPoly":
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return UPoly(tuple(cs), var)

    @staticmethod
    def zero(var: str = "x") -> "UPoly":
        return UPoly((), var)

    @staticmethod
    def const(c: RatLike, var: str = "x") -> "UPoly":
        return UPoly.from_coeffs([c], var)

    @staticmethod
    def variable(var: str = "x") -> "UPoly":
        return UPoly((Fraction(0), Fraction(1)), var)

    # ---- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("leading coefficient of zero polynomial")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*{self.var}")
            else:
                parts.append(f"{c}*{self.var}^{k}")
        return " + ".join(parts) if parts else "0"

    # ---- ring operations --------------------------------------------------

    def _same_var(self, other: "UPoly") -> str:
        if self.var != other.var and self.coeffs and other.coeffs \
                and not self.is_constant() and not other.is_constant():
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
        return self.var if not self.is_constant() or other.is_constant() else other.var

    def __add__(self, other: "UPoly | RatLike") -> "UPoly":
        if not isinstance(other, UPoly):
            other = UPoly.const(rat(other), self.var)
        var = self._same_var(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly.from_coeffs(
            [self.coeff(k) + other.coeff(k) for k in range(n)], var)

    __radd__ = __add__

    def __neg__(self) -> "UPoly":
        return UPoly(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other: "UPoly | RatLike") -> "UPoly":
        if not isinstance(other, UPoly):
            other = UPoly.const(rat(other), self.var)
        return self + (-other)

    def __rsub__(self, other: RatLike) -> "UPoly":
        return (-self) + other

    def __mul__(self, other: "UPoly | RatLike") -> "UPoly":
        if not isinstance(other, UPoly):
            c = rat(other)
            return UPoly.from_coeffs([c * a for a in self.coeffs], self.var)
        var = self._same_var(other)
        if not self.coeffs or not other.coeffs:
            return UPoly.zero(var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UPoly.from_coeffs(out, var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UPoly":
        if n < 0:
            raise ValueError("negative power")
        out = UPoly.const(1, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "UPoly") -> Tuple["UPoly", "UPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        var = self._same_var(other)
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return UPoly.zero(var), self
        quo = [Fraction(0)] * (dq + 1)
        inv_lc = 1 / other.lc
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lc
            quo[k] = c
            if c != 0:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UPoly.from_coeffs(quo, var), UPoly.from_coeffs(rem[:other.degree], var)

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "UPoly") -> "UPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def derivative(self) -> "UPoly":
        return UPoly.from_coeffs(
            [k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def compose(self, inner: "UPoly") -> "UPoly":
        """self(inner(t)), by Horner over polynomials."""
        out = UPoly.zero(inner.var)
        for c in reversed(self.coeffs):
            out = out * inner + UPoly.const(c, inner.var)
        return out

    def shift(self, a: RatLike) -> "UPoly":
        """self(x + a)."""
        return self.compose(UPoly.from_coeffs([rat(a), 1], self.var))

    def scale_arg(self, c: RatLike) -> "UPoly":
        """self(c * x)."""
        cc = rat(c)
        return UPoly.from_coeffs(
            [a * cc ** k for k, a in enumerate(self.coeffs)], self.var)

    # ---- evaluation -------------------------------------------------------

    def __call__(self, x: RatLike) -> Fraction:
        v = rat(x)
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * v + c
        return out

    def eval_interval(self, box: Interval) -> Interval:
        """Enclosure of the range over ``box`` by interval Horner."""
        out = iv_point(0)
        for c in reversed(self.coeffs):
            out = iv_add(iv_mul(out, box), iv_point(c))
        return out

    def sign_at(self, x: RatLike) -> int:
        return sign(self(x))

    # ---- content, gcd, square-free ----------------------------------------

    def primitive(self) -> "UPoly":
        """Integer-primitive scalar multiple with the same sign pattern."""
        if not self.coeffs:
            return self
        den = math.lcm(*[c.denominator for c in self.coeffs])
        nums = [int(c * den) for c in self.coeffs]
        g = math.gcd(*nums)
        if g == 0:
            return self
        return UPoly(tuple(Fraction(n // g) for n in nums), self.var)

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def gcd(self, other: "UPoly") -> "UPoly":
        """Monic gcd by the Euclidean algorithm."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, (a % b).primitive()
        return a.monic() if not a.is_zero() else a

    def square_free_part(self) -> "UPoly":
        if self.degree <= 0:
            return self.primitive()
        g = self.gcd(self.derivative())
        return self.exact_div(g).primitive()

    # ---- root bounds and Sturm counting ------------------------------------

    def cauchy_root_bound(self) -> Fraction:
        """B with every real root in (-B, B); 0 for constants."""
        if self.degree <= 0:
            return Fraction(0)
        lead = abs(self.lc)
        m = max(abs(c) for c in self.coeffs[:-1])
        return 1 + m / lead

    def root_separation_floor(self) -> Fraction:
        """Positive B such that every nonzero root r has |r| > B.

        Obtained from the reciprocal polynomial's Cauchy bound after
        stripping the zero root.
        """
        cs = list(self.coeffs)
        if not cs:
            raise ValueError("zero polynomial")
        k = 0
        while cs[k] == 0:
            k += 1
        cs = cs[k:]
        if len(cs) == 1:
            return Fraction(1)  # no nonzero roots at all; any bound works
        rev = UPoly.from_coeffs(list(reversed(cs)), self.var)
        return 1 / rev.cauchy_root_bound()

    def sturm_chain(self) -> List["UPoly"]:
        chain = [self.primitive()]
        d = self.derivative().primitive()
        if not d.is_zero():
            chain.append(d)
            while True:
                r = (chain[-2] % chain[-1])
                if r.is_zero():
                    break
                chain.append((-r).primitive())
        return chain

    @staticmethod
    def _variations(signs: Sequence[int]) -> int:
        out = 0
        prev = 0
        for s in signs:
            if s == 0:
                continue
            if prev != 0 and s != prev:
                out += 1
            prev = s
        return out

    def _variations_at(self, chain: Sequence["UPoly"], x: Fraction) -> int:
        return self._variations([p.sign_at(x) for p in chain])

    def count_roots_half_open(self, lo: RatLike, hi: RatLike,
                              chain: Sequence["UPoly"] | None = None) -> int:
        """Number of distinct real roots in ``(lo, hi]``.

        Valid even when lo or hi is a root (zero-dropped variation counts).
        Works on the square-free content implicitly: multiplicities are
        ignored.
        """
        a, b = rat(lo), rat(hi)
        if a > b:
            raise ValueError("reversed interval")
        if a == b:
            return 0
        if chain is None:
            chain = self.sturm_chain()
        return self._variations_at(chain, a) - self._variations_at(chain, b)

    def sturm_count(self, lo: RatLike, hi: RatLike) -> int:
        """Distinct real roots in the open interval ``(lo, hi)``.

        Raises EndpointRootError if either endpoint is a root; callers are
        expected to nudge endpoints instead of silently reinterpreting them.
        """
        a, b = rat(lo), rat(hi)
        if self.is_zero():
            raise ValueError("root count of the zero polynomial")
        if self(a) == 0 or self(b) == 0:
            raise EndpointRootError(f"endpoint of ({a}, {b}) is a root")
        if a >= b:
            return 0
        return self.count_roots_half_open(a, b)

    def count_real_roots(self) -> int:
        b = self.cauchy_root_bound()
        if b == 0:
            return 0
        return self.count_roots_half_open(-b - 1, b + 1)

    # ---- isolation and refinement ------------------------------------------

    def isolate_roots(self) -> List[Interval]:
        """Disjoint isolating intervals for all distinct real roots.

        Each entry is ``(lo, hi)`` with either ``lo == hi`` (an exact rational
        root) or ``lo < hi``, neither endpoint a root, and exactly one root
        inside the open interval.  Sorted increasingly.  The square-free part
        is taken first, so multiplicities do not matter.
        """
        if self.is_zero():
            raise ValueError("cannot isolate roots of the zero polynomial")
        p = self.square_free_part()
        if p.degree <= 0:
            return []
        chain = p.sturm_chain()
        bound = p.cauchy_root_bound() + 1
        out: List[Interval] = []
        stack: List[Tuple[Fraction, Fraction, int]] = []
        total = p.count_roots_half_open(-bound, bound, chain)
        # p(bound) != 0 since bound exceeds the root bound
        if total:
            stack.append((-bound, bound, total))
        while stack:
            lo, hi, n = stack.pop()
            # invariant: n = number of roots in the open (lo, hi); neither
            # endpoint is a root except possibly recorded exact ones already
            # excluded from n
            if n == 0:
                continue
            if n == 1 and p(lo) != 0 and p(hi) != 0:
                out.append((lo, hi))
                continue
            mid = (lo + hi) / 2
            at_mid = p(mid)
            left = p.count_roots_half_open(lo, mid, chain)
            if at_mid == 0:
                out.append((mid, mid))
                left -= 1
            right = n - left - (1 if at_mid == 0 else 0)
            if left:
                stack.append((lo, mid, left))
            if right:
                stack.append((mid, hi, right))
        out.sort()
        return out

    def refine_root(self, interval: Interval, width: RatLike) -> Interval:
        """Shrink an isolating interval below ``width`` by bisection.

        The input must isolate exactly one root of self (exact points pass
        through).  If the true root is hit exactly, collapses to a point.
        """
        w = rat(width)
        lo, hi = interval
        if lo == hi:
            return interval
        if self(lo) == 0 or self(hi) == 0:
            raise EndpointRootError("isolating interval endpoint is a root")
        slo, shi = self.sign_at(lo), self.sign_at(hi)
        if slo == shi:
            # not a sign-change interval (even multiplicity was already
            # removed upstream; treat via Sturm bisection instead)
            chain = self.sturm_chain()
            while hi - lo > w:
                mid = (lo + hi) / 2
                if self(mid) == 0:
                    return (mid, mid)
                if self.count_roots_half_open(lo, mid, chain) == 1:
                    hi = mid
                else:
                    lo = mid
            return (lo, hi)
        while hi - lo > w:
            mid = (lo + hi) / 2
            smid = self.sign_at(mid)
            if smid == 0:
                return (mid, mid)
            if smid == slo:
                lo = mid
            else:
                hi = mid
        return (lo, hi)

    def rational_roots(self) -> List[Fraction]:
        """All rational roots, found by isolating and testing exactness."""
        out = []
        for lo, hi in self.isolate_roots():
            if lo == hi:
                out.append(lo)
        return out


def poly_from_roots(roots: Iterable[RatLike], var: str = "x") -> UPoly:
    out = UPoly.const(1, var)
    for r in roots:
        out = out * UPoly.from_coeffs([-rat(r), 1], var)
    return out


def lagrange_interpolate(points: Sequence[Tuple[Fraction, Fraction]],
                         var: str = "x") -> UPoly:
    """Unique interpolating polynomial through distinct-abscissa points."""
    out = UPoly.zero(var)
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        term = UPoly.const(yi, var)
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            term = term * UPoly.from_coeffs([-xj, 1], var) * (1 / (xi - xj))
        out = out + term
    return out
