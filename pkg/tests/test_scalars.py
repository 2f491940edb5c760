from fractions import Fraction

import pytest
from hypothesis import given

from holoform import I, ONE, ZERO, Scalar
from holoform.scalars import as_scalar

from conftest import nonzero_scalars, scalars


def test_i_squared():
    assert I * I == Scalar(-1)
    assert (ONE + I) ** 2 == 2 * I


def test_division_exact():
    assert Scalar(1) / Scalar(3) == Scalar(Fraction(1, 3))
    assert (ONE + I).inverse() == Scalar(Fraction(1, 2), Fraction(-1, 2))


def test_zero_inverse():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


@pytest.mark.parametrize(
    "value, text",
    [(Scalar(1, 1), "1+i"), (Scalar(0, -1), "-i"), (Scalar(0, Fraction(3, 4)), "3/4*i"),
     (Scalar(Fraction(-1, 2), -2), "-1/2-2*i"), (Scalar(5), "5"), (ZERO, "0")],
)
def test_render(value, text):
    assert str(value) == text
    assert Scalar.parse(text) == value


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        Scalar.parse("1+j")


def test_coercions():
    assert as_scalar(3) == Scalar(3)
    assert as_scalar(2 + 3j) == Scalar(2, 3)
    with pytest.raises(TypeError):
        as_scalar(0.5 + 1j)
    assert 2 == Scalar(2) and hash(Scalar(2)) == hash(2)


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO


@given(nonzero_scalars)
def test_inverse(a):
    assert a * a.inverse() == ONE
    assert a.norm() == (a * a.conjugate()).re


@given(scalars)
def test_render_round_trip(a):
    assert Scalar.parse(str(a)) == a
