"""Resultants, discriminants, and the discreteness test they feed.

The resultant of two polynomials in a chosen variable is the determinant
of their Sylvester matrix over the ring of polynomials in the remaining
variables.  It vanishes identically exactly when the two share a factor of
positive degree in that variable, which is what makes it a robust witness
for coprimality of germs: a nonzero resultant certifies coprimality at the
center point and at every nearby point at once.

Determinants are computed by fraction-free Bareiss elimination (every
division in the schedule is exact over the polynomial ring), with direct
cofactor expansion for matrices of size at most 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Point, Polynomial, as_point
from .errors import (
    DegreeTooSmallError,
    DegreeZeroError,
    NonConstantLeadingCoefficientError,
)
from .weierstrass import apply_shear, make_regular


@dataclass(frozen=True)
class CoprimeReport:
    """Resultant-based coprimality verdict for two germs at a point.

    `resultant_poly` lives in the base variables (the distinguished one is
    eliminated).  A nonzero resultant certifies that the two germs are
    coprime at the point and remain so at every nearby point;
    `vanishing_at_point` records whether the witness itself vanishes at the
    base point, which is what the discreteness question hinges on.
    `applied_change` is the shared shear used to make both inputs regular.
    """

    resultant_poly: Polynomial
    coprime_germ_at_point: bool
    vanishing_at_point: bool
    var: int
    applied_change: tuple | None = None


def sylvester_matrix(f: Polynomial, g: Polynomial, j: int) -> list:
    """(df+dg) x (df+dg) Sylvester matrix of f and g in variable j.

    Entries are polynomials in the same ambient space with variable j
    absent.  Both inputs must have positive degree in variable j.
    """
    fc = f.coefficients_in(j)
    gc = g.coefficients_in(j)
    df, dg = len(fc) - 1, len(gc) - 1
    if df < 1:
        raise DegreeZeroError(f"first polynomial has degree {max(df, 0)} in z{j}")
    if dg < 1:
        raise DegreeZeroError(f"second polynomial has degree {max(dg, 0)} in z{j}")
    n = f.n
    zero = Polynomial.zero(n)
    fdesc = fc[::-1]
    gdesc = gc[::-1]
    size = df + dg
    rows = []
    for shift in range(dg):
        rows.append([zero] * shift + fdesc + [zero] * (size - df - 1 - shift))
    for shift in range(df):
        rows.append([zero] * shift + gdesc + [zero] * (size - dg - 1 - shift))
    return rows


def matrix_det(rows: list) -> Polynomial:
    """Exact determinant of a square matrix of polynomials."""
    size = len(rows)
    if size == 0 or any(len(r) != size for r in rows):
        raise ValueError("matrix must be square and non-empty")
    n = rows[0][0].n
    if size <= 4:
        return _cofactor_det(rows, n)
    return _bareiss_det(rows, n)


def resultant(f: Polynomial, g: Polynomial, j: int) -> Polynomial:
    """Sylvester resultant of f and g with respect to variable j, exact.

    The result is a polynomial in the same ambient space with variable j
    eliminated; it is zero exactly when f and g share a factor of positive
    degree in variable j.
    """
    return matrix_det(sylvester_matrix(f, g, j))


def discriminant(f: Polynomial, j: int) -> Polynomial:
    """(-1)^(d(d-1)/2) * Res_j(f, df/dz_j) / leading coefficient.

    Requires degree d >= 2 in variable j and a constant (rational) leading
    coefficient.  The normalization makes the monic quadratic case come out
    as a^2 - 4b exactly.
    """
    d = f.degree_in(j)
    if f.is_zero() or d < 2:
        raise DegreeTooSmallError(f"discriminant needs degree >= 2 in z{j}")
    lead = f.coefficients_in(j)[d]
    if lead.total_degree() > 0:
        raise NonConstantLeadingCoefficientError(
            f"leading coefficient in z{j} is not a rational constant"
        )
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return resultant(f, f.derivative(j), j) * (Fraction(sign) / lead.constant_term())


def coprime_at(g: Polynomial, h: Polynomial, p, j: int) -> CoprimeReport:
    """Resultant-witnessed coprimality of the germs of g and h at p.

    Both inputs are shifted so p becomes the origin, then a single shear
    (found on the product g*h, so it serves both) makes them regular in
    variable j. The report's resultant lives in the base variables; when it
    is nonzero the germs are coprime at p and stay coprime at all nearby
    points.
    """
    if g.n != h.n:
        raise ValueError("inputs live in different variable counts")
    p = as_point(p, g.n)
    gs = g.shift(p)
    hs = h.shift(p)
    _, report = make_regular(gs * hs, j)
    change = report.applied_change
    if change is not None and any(c != 0 for c in change):
        gs = apply_shear(gs, j, change)
        hs = apply_shear(hs, j, change)
    r = resultant(gs, hs, j).drop_variable(j)
    return CoprimeReport(
        resultant_poly=r,
        coprime_germ_at_point=not r.is_zero(),
        vanishing_at_point=r.evaluate((Fraction(0),) * r.n) == 0,
        var=j,
        applied_change=change,
    )


def zero_set_discrete(R: Polynomial, p) -> bool:
    """Whether the zero set of R is discrete near p.

    R is a polynomial in the base variables (a resultant, typically).  A
    nonvanishing value at p means no zeros nearby at all.  In base
    dimension 1 a nonzero polynomial has isolated zeros.  In base dimension
    >= 2 a nonconstant polynomial vanishing at p vanishes on a positive-
    dimensional set through p, so the answer is False; and the zero
    polynomial vanishes everywhere.
    """
    p = as_point(p, R.n)
    if R.is_zero():
        return False
    if R.evaluate(p) != 0:
        return True
    return R.n <= 1


def _cofactor_det(rows: list, n: int) -> Polynomial:
    size = len(rows)
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Polynomial.zero(n)
    for col in range(size):
        entry = rows[0][col]
        if entry.is_zero():
            continue
        minor = [r[:col] + r[col + 1 :] for r in rows[1:]]
        term = entry * _cofactor_det(minor, n)
        total = total - term if col % 2 else total + term
    return total


def _bareiss_det(rows: list, n: int) -> Polynomial:
    m = [row[:] for row in rows]
    size = len(m)
    zero = Polynomial.zero(n)
    prev = Polynomial.constant(n, 1)
    sign = 1
    for k in range(size - 1):
        if m[k][k].is_zero():
            pivot_row = next(
                (r for r in range(k + 1, size) if not m[r][k].is_zero()), None
            )
            if pivot_row is None:
                return zero
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for jj in range(k + 1, size):
                num = m[i][jj] * m[k][k] - m[i][k] * m[k][jj]
                # Bareiss guarantee: the previous pivot divides exactly
                m[i][jj] = num.exact_div(prev)
            m[i][k] = zero
        prev = m[k][k]
    det = m[size - 1][size - 1]
    return -det if sign < 0 else det
