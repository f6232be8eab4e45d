"""satopo: certified topological invariants of polynomial sets in the plane.

The package computes, with exact rational/algebraic arithmetic throughout:

* critical points of polynomial functions and their local topological
  degrees / indices,
* the topological degree of the gradient at infinity,
* asymptotic critical values and the index sums controlling the topology of
  level and sublevel sets at infinity,
* Euler characteristics (ordinary and compactly supported) of semi-algebraic
  level, sublevel, and superlevel sets, and of their links at infinity,
* critical points, indices, and Gauss-Bonnet curvature measures of linear
  functions on closed semi-algebraic sets (regions and curves), and
* a verification harness that checks a catalogue of global index identities
  on user-supplied or randomly generated inputs.

The top-level namespace re-exports the main entry points; submodules hold
the machinery.
"""

from .rational import Rat, format_rational, parse_rational
from .upoly import UPoly
from .bpoly import BPoly
from .algnum import AlgNumber
from .parsing import parse_poly
from .circle import degree_at_infinity
from .critical import CriticalPoint, critical_values, find_critical_points
from .euler import chi, chi_at, chi_c, chi_c_at, fiber_profile
from .infinity import (generic_basepoint, half_branches, is_proper,
                       jump_sets, lambda_mu_nu, lambda_set, link_chi,
                       r_infinity)
from .strata import (Direction, PlaneSet, gauss_bonnet, linear_morse_summary,
                     plane_set, stratified_critical_points)
from .identities import (IdentityId, IdentityReport, applicable_identities,
                         verify)
from .corpus import (BUILTIN_CORPUS, parse_corpus, run_corpus,
                     seeded_polynomials)
from .render import render_svg

__all__ = [
    "AlgNumber",
    "BPoly",
    "BUILTIN_CORPUS",
    "CriticalPoint",
    "Direction",
    "IdentityId",
    "IdentityReport",
    "PlaneSet",
    "Rat",
    "UPoly",
    "applicable_identities",
    "chi",
    "chi_at",
    "chi_c",
    "chi_c_at",
    "critical_values",
    "degree_at_infinity",
    "fiber_profile",
    "find_critical_points",
    "format_rational",
    "gauss_bonnet",
    "generic_basepoint",
    "half_branches",
    "is_proper",
    "jump_sets",
    "lambda_mu_nu",
    "lambda_set",
    "linear_morse_summary",
    "link_chi",
    "parse_corpus",
    "parse_poly",
    "parse_rational",
    "plane_set",
    "r_infinity",
    "render_svg",
    "run_corpus",
    "seeded_polynomials",
    "stratified_critical_points",
    "verify",
]

__version__ = "0.1.0"
