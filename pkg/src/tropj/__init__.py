"""Exact tropical j-invariants of plane elliptic curves over Puiseux series."""

from .curve import cycle_length_formula, cycle_of, dual_curve, find_cycle, j_trop
from .errors import (
    AllTermsInfinite,
    AlphaTooSmall,
    CalibrationFailure,
    DegenerateFan,
    DegenerateLift,
    DegeneratePolygon,
    EmptyPolynomial,
    NotFullyMarked,
    NotOneInteriorPoint,
    ParseError,
    SingularCurve,
    TropjError,
    UnsupportedSupport,
)
from .geometry import MarkedPolygon, UnimodularMap, apply_unimodular, classify_polygon, reference_polygon
from .jinvariant import calibrate, generic_val, j_exact, symbolic_AB, val_j_generic
from .laurent import LaurentPoly, format_poly, parse
from .puiseux import INF, PuiseuxNumber, val
from .subdivision import TropicalPoly, lower_hull_subdivision, tropicalize
from .theorem import check_theorem, random_harness, reduce_support

__version__ = "0.1.0"

__all__ = [
    "AllTermsInfinite", "AlphaTooSmall", "CalibrationFailure", "DegenerateFan", "DegenerateLift",
    "DegeneratePolygon", "EmptyPolynomial", "INF", "LaurentPoly", "MarkedPolygon", "NotFullyMarked",
    "NotOneInteriorPoint", "ParseError", "PuiseuxNumber", "SingularCurve", "TropicalPoly", "TropjError",
    "UnimodularMap", "UnsupportedSupport", "apply_unimodular", "calibrate", "check_theorem",
    "classify_polygon", "cycle_length_formula", "cycle_of", "dual_curve", "find_cycle", "format_poly",
    "generic_val", "j_exact", "j_trop", "lower_hull_subdivision", "parse", "random_harness",
    "reduce_support", "reference_polygon", "symbolic_AB", "tropicalize", "val", "val_j_generic",
]
