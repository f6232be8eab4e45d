"""Command-line front end over the exact pipeline.

Conventions shared by all subcommands: rational values print as "p/q";
algebraic values print as an approximation plus a certified interval.
Exit status 0 means success (for `verify`, a pass or an honest skip),
1 means a verification failed, 2 means the input was bad or degenerate.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, Tuple

from .bpoly import BPoly
from .circle import degree_at_infinity
from .corpus import BUILTIN_CORPUS, run_corpus
from .critical import find_critical_points
from .euler import chi, chi_c
from .identities import IdentityId, _jsonable, verify
from .infinity import (generic_basepoint, half_branches, jump_sets,
                       lambda_set, link_chi, r_infinity)
from .parsing import parse_poly
from .render import render_svg
from .strata import Direction, PlaneSet, gauss_bonnet, plane_set


def _fraction(s: str) -> Fraction:
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError("zero denominator")


def _direction(s: str) -> Direction:
    parts = s.split(",")
    if len(parts) != 2:
        raise ValueError(f"direction {s!r} is not of the form a/b,c/d")
    return Direction((Fraction(parts[0]), Fraction(parts[1])))


def _one_input(args,
               allow_poly: bool = True
               ) -> Tuple[Optional[BPoly], Optional[PlaneSet]]:
    """The polynomial or plane set named by (positional, --region, --curve)."""
    given = []
    if allow_poly and getattr(args, "poly", None) is not None:
        given.append("poly")
    if getattr(args, "region", None) is not None:
        given.append("region")
    if getattr(args, "curve", None) is not None:
        given.append("curve")
    if len(given) != 1:
        options = "<poly>, --region, --curve" if allow_poly \
            else "--region, --curve"
        raise ValueError(f"give exactly one of {options}")
    if given[0] == "poly":
        return parse_poly(args.poly), None
    kind = given[0]
    return None, plane_set(parse_poly(getattr(args, kind)), kind)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _cmd_critical(args) -> int:
    f = parse_poly(args.poly)
    pts = find_critical_points(f)
    _emit({"f": str(f), "critical_points": [
        {"x": _jsonable(p.point.x), "y": _jsonable(p.point.y),
         "value": _jsonable(p.value), "local_degree": p.local_degree}
        for p in pts]})
    return 0


def _cmd_deg_inf(args) -> int:
    print(degree_at_infinity(parse_poly(args.poly)))
    return 0


def _cmd_lambda(args) -> int:
    f = parse_poly(args.poly)
    a = generic_basepoint(f, args.seed)
    le, eq, ge = jump_sets(f, a)
    _emit({"f": str(f), "basepoint": [str(a[0]), str(a[1])],
           "lambda": _jsonable(list(lambda_set(f, a).values)),
           "jump_le": _jsonable(list(le.values)),
           "jump_eq": _jsonable(list(eq.values)),
           "jump_ge": _jsonable(list(ge.values))})
    return 0


def _cmd_chi(args) -> int:
    f = parse_poly(args.poly)
    value = (chi_c if args.compact else chi)(f, args.alpha, args.flavor)
    print(value)
    return 0


def _cmd_link(args) -> int:
    print(link_chi(parse_poly(args.poly), args.alpha, args.flavor))
    return 0


def _cmd_branches(args) -> int:
    g = parse_poly(args.poly)
    _emit({"g": str(g), "half_branches": half_branches(g),
           "r_infinity": r_infinity(g)})
    return 0


def _cmd_verify(args) -> int:
    f, X = _one_input(args)
    v = _direction(args.v) if args.v is not None else None
    report = verify(args.identity, f=f, X=X, v=v, alpha=args.alpha,
                    seed=args.seed, mode=args.mode, n=args.n, tol=args.tol)
    print(report.to_json())
    return 0 if (report.passed or report.skipped) else 1


def _cmd_corpus(args) -> int:
    if args.builtin:
        if args.file is not None:
            raise ValueError("give a corpus file or --builtin, not both")
        text = BUILTIN_CORPUS
    elif args.file is not None:
        with open(args.file) as fh:
            text = fh.read()
    else:
        raise ValueError("give a corpus file or --builtin")
    result = run_corpus(text)
    for report in result.reports:
        print(report.line())
    for lineno, msg in result.degenerate:
        print(f"DEGENERATE line {lineno}: {msg}")
    print(result.summary())
    return result.exit_code


def _cmd_gauss_bonnet(args) -> int:
    _, X = _one_input(args, allow_poly=False)
    value, err = gauss_bonnet(X, mode=args.mode, n=args.n, tol=args.tol)
    _emit({"set": str(X), "mode": args.mode, "value": str(value),
           "error_bound": str(err), "approx": float(value)})
    return 0


def _cmd_plot(args) -> int:
    f, X = _one_input(args)
    svg = render_svg(f=f, X=X, seed=args.seed)
    with open(args.output, "w") as fh:
        fh.write(svg)
    print(f"wrote {args.output}")
    return 0


def _add_alpha_flavor(q) -> None:
    q.add_argument("--alpha", type=_fraction, required=True,
                   help="rational level, as p/q")
    q.add_argument("--flavor", choices=("le", "eq", "ge"), required=True)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="satopo",
        description="Certified topological invariants of polynomial "
                    "semi-algebraic sets in the plane.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("critical",
                       help="critical points with degrees and values")
    q.add_argument("poly")
    q.set_defaults(func=_cmd_critical)

    q = sub.add_parser("deg-inf", help="degree at infinity of the gradient")
    q.add_argument("poly")
    q.set_defaults(func=_cmd_deg_inf)

    q = sub.add_parser("lambda",
                       help="asymptotic critical values and jump sets")
    q.add_argument("poly")
    q.add_argument("--seed", type=int, default=0,
                   help="basepoint draw (default 0)")
    q.set_defaults(func=_cmd_lambda)

    q = sub.add_parser("chi", help="Euler characteristic of one level "
                                   "or sublevel set")
    q.add_argument("poly")
    _add_alpha_flavor(q)
    q.add_argument("--compact", action="store_true",
                   help="compactly supported variant")
    q.set_defaults(func=_cmd_chi)

    q = sub.add_parser("link", help="Euler characteristic of the link "
                                    "at infinity")
    q.add_argument("poly")
    _add_alpha_flavor(q)
    q.set_defaults(func=_cmd_link)

    q = sub.add_parser("branches",
                       help="half-branches at infinity of a curve")
    q.add_argument("poly")
    q.set_defaults(func=_cmd_branches)

    q = sub.add_parser("verify", help="check one identity on one input")
    q.add_argument("--identity", required=True,
                   choices=[i.value for i in IdentityId], metavar="ID")
    q.add_argument("poly", nargs="?")
    q.add_argument("--region", metavar="G", help="use X = {G <= 0}")
    q.add_argument("--curve", metavar="G", help="use X = {G = 0}")
    q.add_argument("--alpha", type=_fraction, default=Fraction(0))
    q.add_argument("--v", metavar="A/B,C/D",
                   help="rational unit direction for P5.4/P5.5")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--mode", choices=("exact", "sampled"), default="sampled",
                   help="curvature average mode for T5.8")
    q.add_argument("--n", type=int, default=64)
    q.add_argument("--tol", type=_fraction, default=None)
    q.set_defaults(func=_cmd_verify)

    q = sub.add_parser("corpus", help="run every applicable identity over "
                                      "a corpus file")
    q.add_argument("file", nargs="?")
    q.add_argument("--builtin", action="store_true",
                   help="use the built-in corpus")
    q.set_defaults(func=_cmd_corpus)

    q = sub.add_parser("gauss-bonnet",
                       help="total curvature measure of a set")
    q.add_argument("--region", metavar="G")
    q.add_argument("--curve", metavar="G")
    q.add_argument("--mode", choices=("exact", "sampled"), default="exact")
    q.add_argument("--n", type=int, default=64)
    q.add_argument("--tol", type=_fraction, default=None)
    q.set_defaults(func=_cmd_gauss_bonnet)

    q = sub.add_parser("plot", help="render level-curve geometry as SVG")
    q.add_argument("poly", nargs="?")
    q.add_argument("--region", metavar="G")
    q.add_argument("--curve", metavar="G")
    q.add_argument("-o", "--output", required=True, metavar="FILE.svg")
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(func=_cmd_plot)

    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError, ZeroDivisionError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
