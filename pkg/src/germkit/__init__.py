"""Exact local analysis of polynomial germs at rational points.

The package answers, with exact rational arithmetic and machine-checkable
certificates, whether a polynomial is locally irreducible at a given point,
and scans parametric curves of base points for places where that answer
flips.  Everything is built from sparse exact polynomials, truncated power
series, Weierstrass preparation, and resultants; no floating point anywhere.
"""

__version__ = "0.1.0"

from .algebra import Point, Polynomial, as_point, as_rational, grlex_key, rational_sqrt
from .elimination import (
    CoprimeReport,
    coprime_at,
    discriminant,
    matrix_det,
    resultant,
    sylvester_matrix,
    zero_set_discrete,
)
from .errors import (
    DegreeTooSmallError,
    DegreeZeroError,
    DimensionMismatchError,
    DistinguishedVarDividesError,
    GermkitError,
    NonConstantLeadingCoefficientError,
    NotAUnitError,
    NotRegularError,
    OrderTooSmallError,
    ParseError,
    ShearExhaustedError,
    UnknownVariableError,
    VariableIndexError,
    ZeroPolynomialError,
)
from .germs import (
    BinomialCoprimeEdge,
    BinomialNoncoprimeEdge,
    DegreeOne,
    DistinguishedVarDivides,
    EdgePolynomialSplits,
    GermQuery,
    GermStatus,
    LowestFormNotASquare,
    MonomialUnitSquare,
    MultiEdgePolygon,
    NewtonPolygon,
    NonzeroValue,
    OddVariableOrder,
    PolygonEdge,
    ScanReport,
    ScanSample,
    SmoothPoint,
    SquareDecision,
    analyze_germ,
    is_local_square,
    newton_polygon,
    polygon_verdict,
    quadratic_germ_test,
    scan_stability,
)
from .parsing import format_poly, parse_curve, parse_point, parse_poly, parse_rationals
from .series import TruncatedSeries, ts_inverse, ts_mul, ts_sqrt
from .weierstrass import (
    RegularityReport,
    WeierstrassData,
    apply_shear,
    make_regular,
    regular_order,
    weierstrass_prepare,
)
from .cli import main, run_cli

__all__ = [
    "__version__",
    "Point",
    "Polynomial",
    "as_point",
    "as_rational",
    "grlex_key",
    "rational_sqrt",
    "TruncatedSeries",
    "ts_inverse",
    "ts_mul",
    "ts_sqrt",
    "RegularityReport",
    "WeierstrassData",
    "apply_shear",
    "make_regular",
    "regular_order",
    "weierstrass_prepare",
    "CoprimeReport",
    "coprime_at",
    "discriminant",
    "matrix_det",
    "resultant",
    "sylvester_matrix",
    "zero_set_discrete",
    "BinomialCoprimeEdge",
    "BinomialNoncoprimeEdge",
    "DegreeOne",
    "DistinguishedVarDivides",
    "EdgePolynomialSplits",
    "GermQuery",
    "GermStatus",
    "LowestFormNotASquare",
    "MonomialUnitSquare",
    "MultiEdgePolygon",
    "NewtonPolygon",
    "NonzeroValue",
    "OddVariableOrder",
    "PolygonEdge",
    "ScanReport",
    "ScanSample",
    "SmoothPoint",
    "SquareDecision",
    "analyze_germ",
    "is_local_square",
    "newton_polygon",
    "polygon_verdict",
    "quadratic_germ_test",
    "scan_stability",
    "format_poly",
    "parse_curve",
    "parse_point",
    "parse_poly",
    "parse_rationals",
    "GermkitError",
    "DimensionMismatchError",
    "VariableIndexError",
    "ZeroPolynomialError",
    "NotAUnitError",
    "NotRegularError",
    "OrderTooSmallError",
    "ShearExhaustedError",
    "DegreeZeroError",
    "DegreeTooSmallError",
    "NonConstantLeadingCoefficientError",
    "DistinguishedVarDividesError",
    "ParseError",
    "UnknownVariableError",
    "main",
    "run_cli",
]
