"""Local classification of polynomial germs with machine-checkable certificates.

The classifier is deliberately a partial decision procedure.  It is
decisive on units, smooth points, degree-1 and degree-2 Weierstrass germs
in any dimension, and bivariate germs caught by the Newton polygon
criteria; everything else comes back Undetermined with a reason.  Every
decisive answer carries a certificate holding exactly the data needed to
re-verify it independently:

  NonzeroValue          f(p) != 0, the germ is a unit
  SmoothPoint           gradient nonzero, the zero set is locally a graph
  DegreeOne             Weierstrass degree 1, monic linear germs are prime
  OddVariableOrder      the discriminant has odd order in one variable, so
                        it is not a square (orders of squares are even)
  MonomialUnitSquare    the discriminant is monomial * unit with even
                        exponents; carries the square root when it is
                        rationally representable
  LowestFormNotASquare  the lowest homogeneous form of the discriminant is
                        provably not a square of a form
  DistinguishedVarDivides  e_d = 0, the distinguished variable splits off
  MultiEdgePolygon / BinomialCoprimeEdge / BinomialNoncoprimeEdge /
  EdgePolynomialSplits  Newton polygon criteria for bivariate germs

All certificates are statements over the complex numbers; rational
arithmetic is only the computation substrate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import ClassVar, Optional

from .algebra import Polynomial, as_point, as_rational
from .errors import DimensionMismatchError, DistinguishedVarDividesError
from .series import TruncatedSeries, ts_sqrt
from .weierstrass import WeierstrassData, make_regular, weierstrass_prepare

# -- certificates -----------------------------------------------------------


@dataclass(frozen=True)
class NonzeroValue:
    """f(p) != 0: the germ is a unit in the local ring."""

    kind: ClassVar[str] = "NonzeroValue"
    value: Fraction


@dataclass(frozen=True)
class SmoothPoint:
    """Nonzero gradient at the point: the zero set is locally smooth."""

    kind: ClassVar[str] = "SmoothPoint"
    gradient: tuple


@dataclass(frozen=True)
class DegreeOne:
    """Weierstrass degree 1: monic linear polynomials are irreducible."""

    kind: ClassVar[str] = "DegreeOne"


@dataclass(frozen=True)
class OddVariableOrder:
    """variable_order(D, variable) = order, an odd number.

    In a power series domain the minimal exponent of any variable in a
    square is even (lowest slices cannot cancel), so D is not a square.
    """

    kind: ClassVar[str] = "OddVariableOrder"
    variable: int
    order: int


@dataclass(frozen=True)
class MonomialUnitSquare:
    """D = x^(2*half_exponents) * (unit_root)^2, certified square.

    `root` is the square root of D itself when one with rational
    coefficients exists (root = x^half * unit_root); otherwise the square
    root exists over the complex numbers but is not rationally
    representable, and both series fields are None (the symbolic case).
    """

    kind: ClassVar[str] = "MonomialUnitSquare"
    root: Optional[TruncatedSeries]
    half_exponents: Optional[tuple] = None
    unit_root: Optional[TruncatedSeries] = None

    @property
    def symbolic(self) -> bool:
        return self.root is None


@dataclass(frozen=True)
class LowestFormNotASquare:
    """The lowest homogeneous form of D is not the square of a form.

    Squares have square lowest forms (lowest forms multiply without
    cancellation), so D cannot be a square.  Covers odd total degree and
    binary forms with an odd corner exponent or a simple root.
    """

    kind: ClassVar[str] = "LowestFormNotASquare"
    form: Polynomial
    degree: int


@dataclass(frozen=True)
class DistinguishedVarDivides:
    """e_d = 0, so the distinguished variable divides the Weierstrass polynomial."""

    kind: ClassVar[str] = "DistinguishedVarDivides"
    variable: int
    multiplicity: int


@dataclass(frozen=True)
class MultiEdgePolygon:
    """The Newton polygon has several edges; each carries its own branches."""

    kind: ClassVar[str] = "MultiEdgePolygon"
    edge_count: int


@dataclass(frozen=True)
class BinomialCoprimeEdge:
    """Single binomial edge (0,d)-(m,0) with gcd(d,m)=1: one branch, irreducible."""

    kind: ClassVar[str] = "BinomialCoprimeEdge"
    d: int
    m: int


@dataclass(frozen=True)
class BinomialNoncoprimeEdge:
    """Single binomial edge with gcd g > 1: the initial part splits into g branches."""

    kind: ClassVar[str] = "BinomialNoncoprimeEdge"
    gcd: int


@dataclass(frozen=True)
class EdgePolynomialSplits:
    """The single edge's polynomial has several distinct complex roots.

    Distinct edge roots belong to distinct factors, so the germ is
    reducible; factor_count is the number of distinct roots.
    """

    kind: ClassVar[str] = "EdgePolynomialSplits"
    factor_count: int


# -- status and query ---------------------------------------------------------

UNIT = "Unit"
SMOOTH_IRREDUCIBLE = "SmoothIrreducible"
SINGULAR_IRREDUCIBLE = "SingularIrreducible"
SINGULAR_REDUCIBLE = "SingularReducible"
UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class GermStatus:
    """Classification of a germ, with certificate and optional factor pair.

    `factors`, when present, are TruncatedSeries in the shifted (and, if
    `applied_change` is set, sheared) coordinates; they multiply back to
    the Weierstrass polynomial modulo the truncation order and neither is
    a unit.  Reducible verdicts from polygon certificates carry no factors
    (producing them would need Puiseux lifting); the certificate alone is
    the deliverable.
    """

    kind: str
    certificate: object | None = None
    factors: tuple | None = None
    reason: str | None = None
    applied_change: tuple | None = None

    @classmethod
    def unit(cls, certificate: NonzeroValue) -> "GermStatus":
        return cls(UNIT, certificate=certificate)

    @classmethod
    def smooth(cls, certificate: SmoothPoint) -> "GermStatus":
        return cls(SMOOTH_IRREDUCIBLE, certificate=certificate)

    @classmethod
    def irreducible(cls, certificate) -> "GermStatus":
        return cls(SINGULAR_IRREDUCIBLE, certificate=certificate)

    @classmethod
    def reducible(cls, certificate, factors: tuple | None = None) -> "GermStatus":
        return cls(SINGULAR_REDUCIBLE, certificate=certificate, factors=factors)

    @classmethod
    def undetermined(cls, reason: str) -> "GermStatus":
        return cls(UNDETERMINED, reason=reason)

    def is_irreducible_verdict(self) -> bool:
        return self.kind in (SMOOTH_IRREDUCIBLE, SINGULAR_IRREDUCIBLE)


@dataclass(frozen=True)
class GermQuery:
    """A germ-classification request: which polynomial, where, how precisely."""

    f: Polynomial
    point: tuple
    order: int = 8
    preferred_var: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "point", as_point(self.point, self.f.n))
        if self.order < 2:
            raise ValueError("truncation order must be at least 2")
        if self.preferred_var is not None and not 1 <= self.preferred_var <= self.f.n:
            raise ValueError(f"preferred variable {self.preferred_var} out of range")


# -- local square test --------------------------------------------------------


@dataclass(frozen=True)
class SquareDecision:
    """Outcome of is_local_square: yes (with root or symbolic), no, or undetermined.

    is_square is True/False for decided cases and None when undetermined.
    For a yes, `root` is a series square root when rationally
    representable, else None with symbolic=True.  Decided cases carry a
    certificate.
    """

    is_square: bool | None
    root: Optional[TruncatedSeries] = None
    symbolic: bool = False
    certificate: object | None = None


def is_local_square(D: Polynomial, N: int) -> SquareDecision:
    """Decide whether D is the square of a germ at the origin (over C).

    Decision cascade: (1) zero is a square; (2) a monomial-unit split
    x^alpha * U with every alpha component even is a square, with explicit
    root when U(0) is a rational square; (3) an odd variable order rules a
    square out; (4) a lowest homogeneous form of odd degree, or one that is
    provably not the square of a form (decided for forms in at most two
    essential variables), rules a square out; (5) otherwise undetermined.
    """
    if D.is_zero():
        root = TruncatedSeries(Polynomial.zero(D.n), N)
        cert = MonomialUnitSquare(root=root)
        return SquareDecision(is_square=True, root=root, certificate=cert)
    split = D.monomial_unit_split()
    if split is not None:
        alpha, U = split
        if all(a % 2 == 0 for a in alpha):
            half = tuple(a // 2 for a in alpha)
            unit_root = ts_sqrt(TruncatedSeries(U, N))
            if unit_root is None:
                cert = MonomialUnitSquare(root=None, half_exponents=half)
                return SquareDecision(is_square=True, symbolic=True, certificate=cert)
            root = TruncatedSeries(Polynomial.monomial(D.n, half), N) * unit_root
            cert = MonomialUnitSquare(
                root=root, half_exponents=half, unit_root=unit_root
            )
            return SquareDecision(is_square=True, root=root, certificate=cert)
        # some exponent is odd; fall through to the order-parity certificate
    for i in range(1, D.n + 1):
        k = D.variable_order(i)
        if k % 2 == 1:
            cert = OddVariableOrder(variable=i, order=k)
            return SquareDecision(is_square=False, certificate=cert)
    form, degree = D.lowest_homogeneous_form()
    if degree % 2 == 1 or _form_is_square_over_C(form) is False:
        cert = LowestFormNotASquare(form=form, degree=degree)
        return SquareDecision(is_square=False, certificate=cert)
    return SquareDecision(is_square=None)


def quadratic_germ_test(wd: WeierstrassData) -> GermStatus:
    """Classify a degree-2 Weierstrass germ via its discriminant.

    w = t^2 + e1*t + e2 splits into two monic linear Weierstrass factors
    exactly when D = e1^2 - 4*e2 is a square germ; the factors are then
    t + (e1 -+ r)/2 for a square root r of D.  When the square exists over
    C but has no rational representation the verdict is still reducible,
    with factors omitted (the symbolic case).
    """
    if wd.degree != 2:
        raise ValueError(
            f"quadratic test needs a degree-2 Weierstrass polynomial, got degree {wd.degree}"
        )
    e1, e2 = wd.coefficients
    D = e1.body * e1.body - 4 * e2.body
    N, j, n = wd.truncation_order, wd.distinguished_var, wd.n
    decision = is_local_square(D, N)
    if decision.is_square:
        if decision.root is None:
            return GermStatus.reducible(decision.certificate, factors=None)
        half = Fraction(1, 2)
        t = Polynomial.variable(n, j)
        lo = ((e1.body - decision.root.body) * half).insert_variable(j)
        hi = ((e1.body + decision.root.body) * half).insert_variable(j)
        factors = (TruncatedSeries(t + lo, N), TruncatedSeries(t + hi, N))
        return GermStatus.reducible(decision.certificate, factors=factors)
    if decision.is_square is False:
        return GermStatus.irreducible(decision.certificate)
    return GermStatus.undetermined(
        "discriminant square-ness is undecided at this truncation order"
    )


# -- Newton polygon -----------------------------------------------------------


@dataclass(frozen=True)
class PolygonEdge:
    """One edge of the lower hull, with its lattice data and edge polynomial.

    Coordinates are (i, j) = (exponent of the base variable, exponent of
    the distinguished variable).  The edge polynomial collects the
    coefficients at the gcd(di,dj)+1 lattice points along the edge, as a
    univariate polynomial in the edge parameter.
    """

    start: tuple
    end: tuple
    slope: Fraction
    lattice_gcd: int
    edge_polynomial: Polynomial


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of a bivariate Weierstrass polynomial's support."""

    support_points: frozenset
    edges: tuple
    degree: int


def newton_polygon(wd: WeierstrassData) -> NewtonPolygon:
    """Newton polygon of a bivariate Weierstrass germ.

    Requires e_d != 0 (otherwise the distinguished variable divides w and
    the polygon never reaches the base axis); that shortcut is signalled
    as DistinguishedVarDivides for the caller to handle.
    """
    if wd.n != 2:
        raise DimensionMismatchError("Newton polygon is defined for bivariate germs")
    if wd.coefficients and wd.coefficients[-1].body.is_zero():
        raise DistinguishedVarDividesError(
            f"e_{wd.degree} = 0: z{wd.distinguished_var} divides the Weierstrass polynomial"
        )
    j = wd.distinguished_var
    x = 1 if j == 2 else 2
    w = wd.weierstrass_polynomial()
    coeffs = {(m[x - 1], m[j - 1]): c for m, c in w.terms()}
    support = frozenset(coeffs)

    m0 = min(i for (i, jj) in support if jj == 0)
    best: dict[int, int] = {}
    for (i, jj) in support:
        if i <= m0 and (i not in best or jj < best[i]):
            best[i] = jj
    pts = sorted(best.items())
    hull: list[tuple[int, int]] = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)

    edges = []
    for (i0, j0), (i1, j1) in zip(hull, hull[1:]):
        di, dj = i1 - i0, j0 - j1
        g = math.gcd(di, dj)
        step_i, step_j = di // g, dj // g
        terms = {}
        for k in range(g + 1):
            c = coeffs.get((i0 + k * step_i, j0 - k * step_j))
            if c:
                terms[(k,)] = c
        edges.append(
            PolygonEdge(
                start=(i0, j0),
                end=(i1, j1),
                slope=Fraction(-dj, di),
                lattice_gcd=g,
                edge_polynomial=Polynomial(1, terms),
            )
        )
    return NewtonPolygon(support_points=support, edges=tuple(edges), degree=wd.degree)


def polygon_verdict(polygon: NewtonPolygon) -> GermStatus:
    """Branch-structure verdict from the polygon's edge data.

    Several edges mean several branches.  A single binomial edge from
    (0,d) to (m,0) is one quasi-homogeneous branch when gcd(d,m)=1 and g
    conjugate branches when g = gcd(d,m) > 1.  A single non-binomial edge
    whose edge polynomial has at least two distinct complex roots splits.
    A repeated single edge root is beyond this oracle: Undetermined.
    """
    edges = polygon.edges
    if len(edges) >= 2:
        return GermStatus.reducible(MultiEdgePolygon(edge_count=len(edges)))
    edge = edges[0]
    d, m = edge.start[1], edge.end[0]
    g = math.gcd(d, m)
    if edge.edge_polynomial.term_count() == 2:
        if g == 1:
            return GermStatus.irreducible(BinomialCoprimeEdge(d=d, m=m))
        return GermStatus.reducible(BinomialNoncoprimeEdge(gcd=g))
    count = _distinct_complex_roots(edge.edge_polynomial)
    if count >= 2:
        return GermStatus.reducible(EdgePolynomialSplits(factor_count=count))
    return GermStatus.undetermined(
        "single Newton polygon edge with one repeated edge root; deeper expansion needed"
    )


# -- the classifier -----------------------------------------------------------


def analyze_germ(query: GermQuery) -> GermStatus:
    """Classify the germ of query.f at query.point.

    Cascade: nonvanishing value -> Unit; nonzero gradient ->
    SmoothIrreducible; otherwise shift to the point, regularize, prepare,
    and decide by degree: 1 -> irreducible, e_d = 0 -> the distinguished
    variable splits off, 2 -> discriminant square test, bivariate ->
    Newton polygon; anything else is outside the decidable fragment.
    Factors in the result are expressed in the shifted coordinates (plus
    the recorded shear when one was needed).
    """
    f, p, N = query.f, query.point, query.order
    value = f.evaluate(p)
    if value != 0:
        return GermStatus.unit(NonzeroValue(value=value))
    gradient = f.gradient_at(p)
    if any(c != 0 for c in gradient):
        return GermStatus.smooth(SmoothPoint(gradient=gradient))
    n = f.n
    j = query.preferred_var if query.preferred_var is not None else n
    shifted = f.shift(p)
    sheared, report = make_regular(shifted, j)
    change = report.applied_change
    if change is not None and all(c == 0 for c in change):
        change = None
    wd = weierstrass_prepare(sheared, j, N)
    d = wd.degree

    if d == 1:
        return replace(GermStatus.irreducible(DegreeOne()), applied_change=change)

    if wd.coefficients[-1].body.is_zero():
        nonzero = [i for i, e in enumerate(wd.coefficients, start=1) if not e.body.is_zero()]
        multiplicity = d - max(nonzero) if nonzero else d
        t = Polynomial.variable(n, j)
        w = wd.weierstrass_polynomial()
        factors = (TruncatedSeries(t, N), TruncatedSeries(w.exact_div(t), N))
        cert = DistinguishedVarDivides(variable=j, multiplicity=multiplicity)
        return replace(
            GermStatus.reducible(cert, factors=factors), applied_change=change
        )

    if d == 2:
        return replace(quadratic_germ_test(wd), applied_change=change)

    if n == 2:
        return replace(polygon_verdict(newton_polygon(wd)), applied_change=change)

    return GermStatus(
        UNDETERMINED,
        reason="Weierstrass degree >= 3 in dimension >= 3 is outside the decidable fragment",
        applied_change=change,
    )


# -- stability scanner --------------------------------------------------------


@dataclass(frozen=True)
class ScanSample:
    """One scanned point: parameter value, coordinates, locus membership, status."""

    t: Fraction
    point: tuple
    on_locus: bool
    status: GermStatus


@dataclass(frozen=True)
class ScanReport:
    """Per-sample classification along a parametric curve, plus a verdict.

    verdict is "Unstable" (the base germ is irreducible but some on-locus
    sample with t != 0 is reducible; `witness` holds it), "Stable-evidence"
    (every on-locus sample got an irreducible classification; finite
    evidence, not a proof), or "Inconclusive" (reason attached).
    """

    curve: tuple
    base_point: tuple
    base_status: GermStatus
    samples: tuple
    verdict: str
    witness: ScanSample | None = None
    reason: str | None = None


def scan_stability(
    f: Polynomial,
    p,
    curve,
    t_values,
    N: int = 8,
    preferred_var: int | None = None,
) -> ScanReport:
    """Classify f along a rational curve and judge stability of irreducibility.

    `curve` is one univariate coordinate polynomial per variable of f, in
    the parameter t, with curve(0) = p.  Every sample is classified (off-
    locus samples come back Unit); membership in the zero locus is exact
    rational equality.  Samples appear in input order and the report is a
    pure function of the inputs.
    """
    p = as_point(p, f.n)
    coords = tuple(_as_curve_coordinate(c) for c in curve)
    if len(coords) != f.n or any(c is None for c in coords):
        raise DimensionMismatchError(
            f"curve must have {f.n} univariate coordinate polynomials"
        )
    t_values = tuple(as_rational(t) for t in t_values)
    if not t_values:
        raise ValueError("t_values must be non-empty")
    start = tuple(c.evaluate((Fraction(0),)) for c in coords)
    if start != p:
        raise ValueError(f"curve(0) = {start} does not pass through the base point {p}")

    base_status = analyze_germ(GermQuery(f, p, N, preferred_var))
    samples = []
    for t in t_values:
        q = tuple(c.evaluate((t,)) for c in coords)
        status = analyze_germ(GermQuery(f, q, N, preferred_var))
        samples.append(
            ScanSample(t=t, point=q, on_locus=(f.evaluate(q) == 0), status=status)
        )
    samples = tuple(samples)

    on_locus = [s for s in samples if s.on_locus]
    verdict, witness, reason = "Inconclusive", None, None
    if not on_locus:
        reason = "no sample lies on the zero locus"
    elif base_status.kind == UNDETERMINED or any(
        s.status.kind == UNDETERMINED for s in on_locus
    ):
        reason = "a germ classification came back undetermined"
    else:
        breaking = [
            s
            for s in on_locus
            if s.t != 0 and s.status.kind == SINGULAR_REDUCIBLE
        ]
        if base_status.is_irreducible_verdict() and breaking:
            verdict, witness = "Unstable", breaking[0]
        elif all(s.status.is_irreducible_verdict() for s in on_locus):
            verdict = "Stable-evidence"
        else:
            reason = "mixed classifications without an instability witness"
    return ScanReport(
        curve=coords,
        base_point=p,
        base_status=base_status,
        samples=samples,
        verdict=verdict,
        witness=witness,
        reason=reason,
    )


def _as_curve_coordinate(c) -> Polynomial | None:
    """Coerce one curve coordinate to a univariate polynomial in t."""
    if isinstance(c, (int, Fraction)):
        return Polynomial.constant(1, c)
    if isinstance(c, Polynomial):
        if c.n == 1:
            return c
        if c.n == 0:
            return c.insert_variable(1)
    return None


# -- univariate and binary-form helpers ---------------------------------------


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _coeff_list(p: Polynomial) -> list:
    """Ascending coefficient list of a univariate polynomial."""
    if p.n != 1:
        raise DimensionMismatchError("expected a univariate polynomial")
    if p.is_zero():
        return []
    top = p.degree_in(1)
    out = [Fraction(0)] * (top + 1)
    for mono, c in p.terms():
        out[mono[0]] = c
    return out


def _ustrip(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _udivmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        factor = a[k + len(b) - 1] * inv
        if factor:
            q[k] = factor
            for i, bc in enumerate(b):
                a[k + i] -= factor * bc
    return q, _ustrip(a)

def _ugcd(a: list, b: list) -> list:
    a, b = _ustrip(list(a)), _ustrip(list(b))
    while b:
        _, r = _udivmod(a, b)
        a, b = b, r
    if a:
        inv = 1 / a[-1]
        a = [c * inv for c in a]
    return a


def _uderiv(a: list) -> list:
    return _ustrip([c * k for k, c in enumerate(a)][1:])


def _usquarefree_part(a: list) -> list:
    g = _ugcd(a, _uderiv(a))
    q, r = _udivmod(a, g)
    assert not r
    return q


def _u_is_square_over_C(a: list) -> bool:
    """Whether a nonzero univariate polynomial is a square over C.

    True exactly when every complex root has even multiplicity (the
    leading coefficient always has a complex square root).  Recursion: the
    squarefree part s must divide a twice, and a / s^2 must be a square.
    """
    a = _ustrip(list(a))
    if len(a) <= 1:
        return bool(a)  # nonzero constants are squares; zero never reaches here
    s = _usquarefree_part(a)
    s2 = _umul(s, s)
    q, r = _udivmod(a, s2)
    if r:
        return False
    return _u_is_square_over_C(q)


def _umul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for k, cb in enumerate(b):
                out[i + k] += ca * cb
    return _ustrip(out)


def _distinct_complex_roots(p: Polynomial) -> int:
    """Number of distinct complex roots = degree of the squarefree part."""
    a = _coeff_list(p)
    return max(len(_usquarefree_part(a)) - 1, 0)


def _form_is_square_over_C(form: Polynomial) -> bool | None:
    """Square-of-a-form test for homogeneous forms, decided for <= 2 essential variables.

    Returns True/False when decided, None for forms genuinely involving
    three or more variables (outside this oracle's fragment).
    """
    essential = [i for i in range(1, form.n + 1) if form.degree_in(i) > 0]
    if not essential:
        return True  # nonzero constant
    if len(essential) == 1:
        return form.degree_in(essential[0]) % 2 == 0
    if len(essential) > 2:
        return None
    xi, yi = essential
    a0 = form.variable_order(xi)
    b0 = form.variable_order(yi)
    if a0 % 2 or b0 % 2:
        return False
    coeffs: dict[int, Fraction] = {}
    for mono, c in form.terms():
        coeffs[mono[xi - 1] - a0] = c
    top = max(coeffs)
    dehom = [coeffs.get(k, Fraction(0)) for k in range(top + 1)]
    return _u_is_square_over_C(dehom)
