from fractions import Fraction

import pytest

from cobloc.scalars import ONE, ZERO, Scalar, mu, parse_scalar


def test_monomial_arithmetic():
    a = mu(1, -2) * mu(2, 2)
    assert a * a.inverse() == ONE
    assert (mu(0) ** 3) / mu(0) == mu(0, 2)
    assert mu(0) ** 0 == ONE


def test_constants_and_coercion():
    assert Scalar.coerce(2) * Scalar.coerce(Fraction(1, 2)) == ONE
    assert Scalar.coerce("1/3") == Scalar.const(Fraction(1, 3))
    assert Scalar.const(0).is_zero() and ZERO.is_zero()
    assert Scalar.const(5).constant_value() == 5


def test_sums_and_equality():
    x = mu(0) + mu(1)
    assert x - mu(1) == mu(0)
    assert not x.is_monomial()
    assert hash(mu(0) * mu(1)) == hash(mu(1) * mu(0))


def test_substitution():
    s = mu(1, -2) * mu(2, 2)
    assert s.substitute({1: 3, 2: 5}) == Scalar.const(Fraction(25, 9))


def test_inverse_of_zero_fails():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_parse_scalar():
    assert parse_scalar("2") == Scalar.const(2)
    assert parse_scalar(str(mu(1, -2) * mu(2, 2))) == mu(1, -2) * mu(2, 2)
