"""Sylvester matrices, fraction-free determinants, resultants, discriminants."""

import random
from fractions import Fraction

import pytest

from germkit.algebra import Polynomial
from germkit.elimination import (
    coprime_at,
    discriminant,
    matrix_det,
    resultant,
    sylvester_matrix,
    zero_set_discrete,
)
from germkit.errors import (
    DegreeTooSmallError,
    DegreeZeroError,
    NonConstantLeadingCoefficientError,
)
from helpers import random_fraction, random_point, random_poly

F = Fraction

CUSP = Polynomial(2, {(0, 2): 1, (3, 0): -1})  # z2^2 - z1^3
COUNTEREXAMPLE = Polynomial(3, {(0, 0, 2): 1, (1, 2, 0): -1})  # z3^2 - z1*z2^2


# -- Sylvester matrix and determinants -------------------------------------------


def test_sylvester_matrix_shape_and_content():
    g = Polynomial(2, {(0, 1): 2})  # 2*z2
    m = sylvester_matrix(CUSP, g, 2)
    # deg 2 + deg 1 in z2 -> 3x3: one row of cusp coefficients, two of g's
    assert len(m) == 3 and all(len(row) == 3 for row in m)
    one = Polynomial(2, {(0, 0): 1})
    zero = Polynomial.zero(2)
    two = Polynomial(2, {(0, 0): 2})
    cube = Polynomial(2, {(3, 0): -1})
    assert m[0] == [one, zero, cube]
    assert m[1] == [two, zero, zero]
    assert m[2] == [zero, two, zero]


def test_sylvester_requires_positive_degree():
    with pytest.raises(DegreeZeroError):
        sylvester_matrix(CUSP, Polynomial.constant(2, 3), 2)


def test_matrix_det_known_values():
    c = Polynomial.constant
    m = [
        [c(1, 2), c(1, 3), c(1, 0)],
        [c(1, 0), c(1, 1), c(1, 4)],
        [c(1, 1), c(1, 0), c(1, 6)],
    ]
    # det [[2,3,0],[0,1,4],[1,0,6]] = 2*6 - 3*(-4) + 0 = 24
    assert matrix_det(m) == c(1, 24)
    with pytest.raises(ValueError):
        matrix_det([[c(1, 1), c(1, 2)]])


def test_bareiss_agrees_with_cofactor_expansion():
    # matrix_det switches from cofactor expansion to Bareiss above size 4;
    # cross-check on polynomial matrices where both routes stay exact.
    rng = random.Random(401)

    def cofactor(m):
        if len(m) == 1:
            return m[0][0]
        total = Polynomial.zero(m[0][0].n)
        for k, entry in enumerate(m[0]):
            minor = [row[:k] + row[k + 1 :] for row in m[1:]]
            term = entry * cofactor(minor)
            total = total + (term if k % 2 == 0 else -term)
        return total

    for size in (5, 6):
        m = [
            [
                Polynomial(1, {(rng.randint(0, 2),): random_fraction(rng, -3, 3, 3)})
                for _ in range(size)
            ]
            for _ in range(size)
        ]
        assert matrix_det(m) == cofactor(m)


def test_det_of_singular_matrix_is_zero():
    c = Polynomial.constant
    row = [c(2, 1), c(2, 2), c(2, 3), c(2, 4), c(2, 5)]
    m = [row, row] + [
        [c(2, F(k * j + 1, 2)) for j in range(5)] for k in range(3)
    ]
    assert matrix_det(m) == Polynomial.zero(2)


# -- resultants -------------------------------------------------------------------


def test_resultant_pinned_values():
    g = Polynomial(2, {(0, 1): 2})
    r = resultant(CUSP, g, 2)
    assert r == Polynomial(2, {(3, 0): -4})  # -4*z1^3
    r3 = resultant(COUNTEREXAMPLE, COUNTEREXAMPLE.derivative(3), 3)
    assert r3 == Polynomial(3, {(1, 2, 0): -4})  # -4*z1*z2^2


def test_resultant_antisymmetry_sign():
    rng = random.Random(402)
    for _ in range(20):
        f = random_poly(rng, 2, 3, 4, nonzero=True)
        g = random_poly(rng, 2, 3, 4, nonzero=True)
        if f.degree_in(2) < 1 or g.degree_in(2) < 1:
            continue
        df, dg = f.degree_in(2), g.degree_in(2)
        sign = -1 if (df * dg) % 2 else 1
        assert resultant(f, g, 2) == sign * resultant(g, f, 2)


def test_resultant_specializes_at_rational_points():
    # Res commutes with substituting rational values for the other variables,
    # provided the leading coefficients survive specialization (monic here).
    rng = random.Random(403)

    def univariate_sylvester_det(fc, gc):
        df, dg = len(fc) - 1, len(gc) - 1
        size = df + dg
        rows = []
        for i in range(dg):
            row = [F(0)] * size
            for k, c in enumerate(reversed(fc)):
                row[i + k] = c
            rows.append(row)
        for i in range(df):
            row = [F(0)] * size
            for k, c in enumerate(reversed(gc)):
                row[i + k] = c
            rows.append(row)
        m = [[Polynomial.constant(1, c) for c in row] for row in rows]
        return matrix_det(m).constant_term()

    instances = 0
    while instances < 5:
        df = rng.randint(1, 3)
        dg = rng.randint(1, 3)
        z2 = Polynomial.variable(2, 2)
        f = z2**df
        g = z2**dg
        for k in range(df):
            f = f + random_poly(rng, 2, 2, 3).substitute(2, Polynomial.zero(2)) * z2**k
        for k in range(dg):
            g = g + random_poly(rng, 2, 2, 3).substitute(2, Polynomial.zero(2)) * z2**k
        r = resultant(f, g, 2)
        instances += 1
        for _ in range(20):
            a = random_fraction(rng, -5, 5, 5)
            fc = [c.evaluate((a, F(0))) for c in f.coefficients_in(2)]
            gc = [c.evaluate((a, F(0))) for c in g.coefficients_in(2)]
            expected = univariate_sylvester_det(fc, gc)
            assert r.evaluate((a, F(0))) == expected


def test_planted_common_factor_kills_resultant():
    rng = random.Random(404)
    z2 = Polynomial.variable(2, 2)
    for _ in range(20):
        h = z2 - random_poly(rng, 2, 2, 2).substitute(2, Polynomial.zero(2))
        a = random_poly(rng, 2, 2, 3, nonzero=True)
        b = random_poly(rng, 2, 2, 3, nonzero=True)
        f, g = h * a, h * b
        if f.degree_in(2) < 1 or g.degree_in(2) < 1:
            continue
        assert resultant(f, g, 2) == Polynomial.zero(2)


# -- discriminants ----------------------------------------------------------------


def test_discriminant_of_monic_quadratic_is_a2_minus_4b():
    rng = random.Random(405)
    z2 = Polynomial.variable(2, 2)
    for _ in range(50):
        a = random_poly(rng, 2, 3, 4).substitute(2, Polynomial.zero(2))
        b = random_poly(rng, 2, 3, 4).substitute(2, Polynomial.zero(2))
        f = z2 * z2 + a * z2 + b
        assert discriminant(f, 2) == a * a - 4 * b


def test_discriminant_pinned_values():
    assert discriminant(CUSP, 2) == Polynomial(2, {(3, 0): 4})  # 4*z1^3
    f = Polynomial(2, {(0, 2): 1, (1, 1): 1, (1, 0): 1})  # z2^2 + z1*z2 + z1
    assert discriminant(f, 2) == Polynomial(2, {(2, 0): 1, (1, 0): -4})


def test_discriminant_errors():
    with pytest.raises(DegreeTooSmallError):
        discriminant(Polynomial(2, {(1, 1): 1}), 2)  # degree 1 in z2
    with pytest.raises(NonConstantLeadingCoefficientError):
        discriminant(Polynomial(2, {(1, 2): 1, (0, 0): 1}), 2)  # lc = z1


# -- coprimality and discreteness ---------------------------------------------------


def test_coprime_at_breakdown_witness():
    # f and its z3-derivative are coprime at 0, but the resultant's zero set
    # is a whole plane through the base point: discreteness fails in dim 3.
    rep = coprime_at(COUNTEREXAMPLE, COUNTEREXAMPLE.derivative(3), (0, 0, 0), 3)
    assert rep.coprime_germ_at_point
    assert rep.vanishing_at_point
    assert rep.resultant_poly == Polynomial(2, {(1, 2): -4})  # -4*z1*z2^2
    assert zero_set_discrete(rep.resultant_poly, (0, 0)) is False


def test_coprime_at_dimension_two_is_discrete():
    rep = coprime_at(CUSP, CUSP.derivative(2), (0, 0), 2)
    assert rep.coprime_germ_at_point
    assert rep.resultant_poly == Polynomial(1, {(3,): -4})  # -4*z1^3
    assert zero_set_discrete(rep.resultant_poly, (0,)) is True


def test_coprime_at_detects_shared_factor():
    shared = Polynomial(2, {(0, 1): 1, (1, 0): -1})  # z2 - z1
    g = shared * Polynomial(2, {(0, 1): 1, (1, 0): 1})
    h = shared * Polynomial(2, {(0, 1): 1, (2, 0): 1})
    rep = coprime_at(g, h, (0, 0), 2)
    assert not rep.coprime_germ_at_point
    assert rep.resultant_poly.is_zero()


def test_zero_set_discrete_conventions():
    r = Polynomial(1, {(3,): -4})
    assert zero_set_discrete(r, (0,)) is True  # univariate, finitely many roots
    assert zero_set_discrete(Polynomial.zero(1), (0,)) is False
    nonvanishing = Polynomial(2, {(0, 0): 1, (1, 0): 1})
    assert zero_set_discrete(nonvanishing, (0, 0)) is True  # no zeros nearby at all
    plane = Polynomial(2, {(1, 0): 1})
    assert zero_set_discrete(plane, (0, 0)) is False
