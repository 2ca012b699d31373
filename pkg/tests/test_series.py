"""Truncated power series: arithmetic mod total degree, inverse, square root."""

import random
from fractions import Fraction

import pytest

from germkit.algebra import Polynomial
from germkit.errors import NotAUnitError
from germkit.series import TruncatedSeries, ts_inverse, ts_mul, ts_sqrt
from helpers import random_fraction, random_poly

F = Fraction


def series(terms, order=8, n=1):
    return TruncatedSeries(Polynomial(n, terms), order)


def test_constructor_truncates_body():
    s = TruncatedSeries(Polynomial(1, {(0,): 1, (9,): 5}), 8)
    assert s.body == Polynomial(1, {(0,): 1})
    assert s.order == 8


def test_order_must_be_positive():
    with pytest.raises(ValueError):
        TruncatedSeries(Polynomial.zero(1), 0)


def test_equality_needs_same_order():
    one = Polynomial.constant(1, 1)
    assert TruncatedSeries(one, 4) != TruncatedSeries(one, 5)
    assert TruncatedSeries(one, 4) == TruncatedSeries(one, 4)


def test_truncate_refuses_to_refine():
    s = series({(0,): 1}, order=4)
    assert s.truncate(3).order == 3
    with pytest.raises(ValueError):
        s.truncate(5)


def test_arithmetic_matches_polynomial_arithmetic_mod_order():
    rng = random.Random(201)
    for _ in range(100):
        n = rng.randint(1, 3)
        order = rng.randint(2, 6)
        a = random_poly(rng, n, 6, 5)
        b = random_poly(rng, n, 6, 5)
        sa, sb = TruncatedSeries(a, order), TruncatedSeries(b, order)
        assert (sa + sb).body == (a + b).truncate(order)
        assert (sa - sb).body == (a - b).truncate(order)
        assert (sa * sb).body == (a * b).truncate(order)
        assert (-sa).body == (-a).truncate(order)


def test_mixed_order_takes_minimum():
    a = series({(1,): 1}, order=6)
    b = series({(1,): 1}, order=3)
    assert (a * b).order == 3


def test_scalar_coercion():
    a = series({(1,): 1}, order=5)
    assert (a + 1).body == Polynomial(1, {(0,): 1, (1,): 1})
    assert (F(1, 2) * a).body == Polynomial(1, {(1,): F(1, 2)})


def test_inverse_of_geometric_series():
    # 1/(1 - z1) = 1 + z1 + z1^2 + ... truncated
    a = series({(0,): 1, (1,): -1}, order=6)
    inv = ts_inverse(a)
    assert inv.body == Polynomial(1, {(k,): 1 for k in range(7)})


def test_inverse_identity_on_random_units():
    rng = random.Random(202)
    one = F(1)
    for _ in range(50):
        n = rng.randint(1, 3)
        order = rng.randint(2, 8)
        body = random_poly(rng, n, order, 6)
        body = body - Polynomial.constant(n, body.constant_term()) + Polynomial.constant(
            n, random_fraction(rng, 1, 9)
        )
        a = TruncatedSeries(body, order)
        assert a.is_unit()
        prod = ts_mul(a, ts_inverse(a))
        assert prod.body == Polynomial.constant(n, one)


def test_inverse_requires_unit():
    with pytest.raises(NotAUnitError):
        ts_inverse(series({(1,): 1}, order=4))


def test_sqrt_of_one_plus_z_has_binomial_coefficients():
    a = series({(0,): 1, (1,): 1}, order=4)
    r = ts_sqrt(a)
    assert r.body == Polynomial(
        1, {(0,): 1, (1,): F(1, 2), (2,): F(-1, 8), (3,): F(1, 16), (4,): F(-5, 128)}
    )


def test_sqrt_square_identity_on_random_units():
    rng = random.Random(203)
    for _ in range(50):
        n = rng.randint(1, 3)
        order = rng.randint(2, 8)
        body = random_poly(rng, n, order, 6)
        c = random_fraction(rng, 1, 9)
        body = body - Polynomial.constant(n, body.constant_term()) + Polynomial.constant(
            n, c * c
        )
        a = TruncatedSeries(body, order)
        r = ts_sqrt(a)
        assert r is not None
        assert ts_mul(r, r) == a
        assert r.constant_term() == c  # positive branch


def test_sqrt_requires_unit():
    with pytest.raises(NotAUnitError):
        ts_sqrt(series({(1,): 1}, order=4))


def test_sqrt_signals_non_rational_square_constant():
    assert ts_sqrt(series({(0,): 2, (1,): 1}, order=4)) is None
