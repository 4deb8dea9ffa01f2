import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers import random_qfunction
from qregular.hstructures import QI, QJ, QK, Quaternion
from qregular.parser import NonPolynomialError, ParseError, parse_constant, parse_function
from qregular.qpolynomial import CPoly, QFunction, Z1, Z1BAR, Z2, Z2BAR


def test_identity():
    assert parse_function("z1 + z2*j") == QFunction(Z1, Z2)


def test_h():
    assert parse_function("conj(z1) + (z1 + conj(z2))*j") == QFunction(Z1BAR, Z1 + Z2BAR)


def test_j_on_either_side():
    # z1 j is already in normal form; j z1 = conj(z1) j
    assert parse_function("z1*j") == QFunction(CPoly(), Z1)
    assert parse_function("j*z1") == QFunction(CPoly(), Z1BAR)


def test_noncommutative_units():
    assert parse_constant("i*j") == QK
    assert parse_constant("j*i") == -QK
    assert parse_constant("k^2") == Quaternion(-1)


def test_precedence_and_unary():
    assert parse_constant("1 + 2*3^2") == Quaternion(19)
    assert parse_constant("-2^2") == Quaternion(-4)
    assert parse_constant("(1 - 3)*(2)") == Quaternion(-4)
    assert parse_constant("3/2 + 0.25") == Quaternion(Fraction(7, 4))


def test_division_by_quaternion_constant():
    assert parse_constant("1/i") == -QI
    assert parse_function("z1/(2*j)") == parse_function("z1*(-j)/2")


def test_quaternion_conj():
    assert parse_constant("conj(1 + i + j + k)") == Quaternion(1, -1, -1, -1)
    assert parse_function("conj(z1 + z2*j)") == QFunction(Z1BAR, -Z2)


def test_quadratic_example():
    f = parse_function("z1*conj(z1) - z2*conj(z2) + conj(z1)*conj(z2)*j")
    assert f == QFunction(Z1 * Z1BAR - Z2 * Z2BAR, Z1BAR * Z2BAR)


@pytest.mark.parametrize("text,pos", [("z1 +", 4), ("z1 + * z2", 5), ("(z1", 3),
                                       ("z3", 0), ("z1 $ z2", 3), ("", 0)])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as err:
        parse_function(text)
    assert err.value.position == pos
    assert not isinstance(err.value, NonPolynomialError)


@pytest.mark.parametrize("text", ["z1^-1", "1/z1", "exp(z1)", "z1^1.5", "sqrt(z2)"])
def test_non_polynomial_constructs(text):
    with pytest.raises(NonPolynomialError):
        parse_function(text)


@given(st.integers(min_value=0, max_value=10 ** 6))
def test_pretty_print_roundtrip(seed):
    f = random_qfunction(random.Random(seed), 3)
    assert parse_function(f.to_string()) == f
