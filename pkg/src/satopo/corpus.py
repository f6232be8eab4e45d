"""Corpus runner: parse input lines, check every applicable identity.

A corpus is a text file with one input per line:

    poly: x*(x*y - 1)
    poly: x^3 - x + y^2  alpha=1/3 seed=2
    region: y - x^2      alpha=-1
    curve: x^2 + y^2 - 1

Trailing key=value tokens set the level and the basepoint seed; ``#``
starts a comment.  Polynomial lines run the whole plane catalog, region
and curve lines the stratified one (a generic direction is picked
automatically from a small candidate list).  Parse problems raise
CorpusParseError with the line number; a line whose set cannot even be
certified (singular boundary, empty set) is recorded as degenerate
rather than aborting the rest of the run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from .algnum import cmp_values
from .bpoly import BPoly
from .critical import InfiniteCriticalSetError
from .identities import (IdentityReport, _points, applicable_identities,
                         verify)
from .parsing import PolyParseError, parse_poly
from .strata import Direction, PlaneSet, bad_directions, plane_set

KINDS = ("poly", "region", "curve")

_DIRECTION_CANDIDATES = (Fraction(0), Fraction(1), Fraction(1, 2),
                         Fraction(2), Fraction(1, 3), Fraction(3),
                         Fraction(-1, 2), Fraction(-3))

BUILTIN_CORPUS = """\
# plane polynomials
poly: x^2 + y^2
poly: x^2 - y^2
poly: x^3 - 3*x*y^2
poly: -x^2 - y^2
poly: x*(x*y - 1)
poly: x^3 - x + y^2   alpha=1/3
poly: x^4 + y^4 + x   alpha=1/2
poly: x^2*y - x
poly: x               alpha=2

# stratified sets
region: x^2 + y^2 - 1
curve: x^2 + y^2 - 1
region: y
region: y - x^2       alpha=-1
"""


class CorpusParseError(ValueError):
    """A corpus line that does not parse; carries the line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass
class CorpusLine:
    kind: str
    expr: BPoly
    text: str
    alpha: Fraction
    seed: int
    lineno: int


def parse_corpus(text: str) -> List[CorpusLine]:
    lines: List[CorpusLine] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        kind, sep, rest = body.partition(":")
        kind = kind.strip()
        if not sep or kind not in KINDS:
            raise CorpusParseError(
                lineno, "expected a 'poly:', 'region:' or 'curve:' prefix")
        alpha, seed = Fraction(0), 0
        expr_tokens: List[str] = []
        for tok in rest.split():
            if tok.startswith("alpha="):
                try:
                    alpha = Fraction(tok[len("alpha="):])
                except (ValueError, ZeroDivisionError):
                    raise CorpusParseError(
                        lineno, f"bad rational in {tok!r}") from None
            elif tok.startswith("seed="):
                try:
                    seed = int(tok[len("seed="):])
                except ValueError:
                    raise CorpusParseError(
                        lineno, f"bad integer in {tok!r}") from None
            elif "=" in tok:
                raise CorpusParseError(
                    lineno, f"unknown key-value token {tok!r}")
            else:
                expr_tokens.append(tok)
        expr_text = " ".join(expr_tokens)
        try:
            expr = parse_poly(expr_text)
        except PolyParseError as e:
            raise CorpusParseError(lineno, str(e)) from None
        lines.append(CorpusLine(kind, expr, expr_text, alpha, seed, lineno))
    return lines


def generic_direction(X: PlaneSet) -> Optional[Direction]:
    """The first candidate direction outside the bad set, if any."""
    bad_ts = [b.t for b in bad_directions(X) if b.t is not None]
    for t in _DIRECTION_CANDIDATES:
        if all(cmp_values(t, bt) != 0 for bt in bad_ts):
            return Direction.from_t(t)
    return None


@dataclass
class CorpusResult:
    reports: List[IdentityReport] = field(default_factory=list)
    degenerate: List[Tuple[int, str]] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.reports if r.passed and not r.skipped)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.reports if not r.passed and not r.skipped)

    @property
    def skipped(self) -> int:
        return sum(1 for r in self.reports if r.skipped)

    @property
    def exit_code(self) -> int:
        if self.degenerate:
            return 2
        return 1 if self.failed else 0

    def summary(self) -> str:
        counts = (f"{self.passed} passed, {self.failed} failed, "
                  f"{self.skipped} skipped")
        if self.degenerate:
            counts += f", {len(self.degenerate)} degenerate"
        return counts


def run_corpus(text: str) -> CorpusResult:
    """Verify every applicable identity of every corpus line."""
    result = CorpusResult()
    for line in parse_corpus(text):
        if line.kind == "poly":
            for ident in applicable_identities("poly"):
                result.reports.append(verify(ident, f=line.expr,
                                             alpha=line.alpha,
                                             seed=line.seed))
            continue
        try:
            X = plane_set(line.expr,
                          "curve" if line.kind == "curve" else "region")
        except ValueError as e:
            result.degenerate.append((line.lineno, str(e)))
            continue
        v = generic_direction(X)
        for ident in applicable_identities(line.kind):
            directional = ident.value in ("P5.4-ALL", "P5.5-ALL")
            if directional and v is None:
                result.reports.append(IdentityReport(
                    ident, f"X = {X}", None, None, False,
                    {}, "no candidate direction avoids the bad set"))
                continue
            result.reports.append(verify(ident, X=X,
                                         v=v if directional else None,
                                         alpha=line.alpha, seed=line.seed))
    return result


@lru_cache(maxsize=None)
def seeded_polynomials(count: int, seed: int = 0,
                       max_degree: int = 4) -> Tuple[BPoly, ...]:
    """Deterministic random polynomials with certified finite critical sets.

    Draws sparse integer-coefficient polynomials of total degree between 2
    and max_degree and keeps those whose critical points the solver can
    certify as a finite set; degenerate draws are discarded, so the list
    always has the requested length.  The certification goes through the
    shared critical-point cache, so later identity checks on the same
    polynomials reuse it.
    """
    rng = random.Random(f"satopo-corpus-{seed}")
    out: List[BPoly] = []
    while len(out) < count:
        degree = rng.randint(2, max_degree)
        terms = {}
        for i in range(degree + 1):
            for j in range(degree + 1 - i):
                if rng.random() < 0.45:
                    c = rng.randint(-4, 4)
                    if c:
                        terms[(i, j)] = Fraction(c)
        if not any(i + j >= 2 for i, j in terms):
            continue
        f = BPoly.from_dict(terms)
        if f.is_constant():
            continue
        try:
            _points(f)
        except InfiniteCriticalSetError:
            continue
        out.append(f)
    return tuple(out)
