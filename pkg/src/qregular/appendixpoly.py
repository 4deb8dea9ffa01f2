"""The degree-6 polynomial deciding holomorphicity of linear psi-regular maps.

A linear psi-regular function is written

    f = (z1 + z2 j) q1 + (z2 + z1 j) q2 + (z1bar + z2bar j) q3

with q1 = a1 + a2 j, q2 = b1 + b2 j, q3 = c1 + c2 j.  ``APPENDIX_TERMS`` is
the published expansion of det(A - (tr A) I)/16 in these coefficients and
their conjugates (a suffix ``b`` marks a conjugate).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ballintegrals import UNIT_BALL
from .criterion import matrix_A
from .gaussian import Gaussian
from .hstructures import Quaternion
from .qpolynomial import QFunction, Z1, Z1BAR, Z2, Z2BAR

APPENDIX_TERMS: tuple[tuple[int, str], ...] = (
    (1, "a1 a2 b2 c1 c1 b1b"),
    (-1, "a1 a2 b1 c1 c2 b1b"),
    (-1, "a1 a1 b2 c1 c2 b1b"),
    (1, "a1 a1 b1 c2 c2 b1b"),
    (-1, "a1 c1 c1 a1b b1b b1b"),
    (-1, "a1 c1 c2 a2b b1b b1b"),
    (1, "a2 a2 b2 c1 c1 b2b"),
    (-1, "a2 a2 b1 c1 c2 b2b"),
    (-1, "a1 a2 b2 c1 c2 b2b"),
    (1, "a1 a2 b1 c2 c2 b2b"),
    (-1, "a2 c1 c1 a1b b1b b2b"),
    (-1, "a1 c1 c2 a1b b1b b2b"),
    (-1, "a2 c1 c2 a2b b1b b2b"),
    (-1, "a1 c2 c2 a2b b1b b2b"),
    (-1, "a2 c1 c2 a1b b2b b2b"),
    (-1, "a2 c2 c2 a2b b2b b2b"),
    (1, "a1 a2 b1 b2 c1 c1b"),
    (-1, "a1 a1 b2 b2 c1 c1b"),
    (-1, "a1 a2 b1 b1 c2 c1b"),
    (1, "a1 a1 b1 b2 c2 c1b"),
    (-2, "a1 b1 c1 a1b b1b c1b"),
    (-1, "a1 b2 c1 a2b b1b c1b"),
    (-1, "a1 b1 c2 a2b b1b c1b"),
    (-1, "a2 b1 c1 a1b b2b c1b"),
    (-2, "a1 b2 c1 a1b b2b c1b"),
    (1, "a1 b1 c2 a1b b2b c1b"),
    (-2, "a2 b2 c1 a2b b2b c1b"),
    (1, "a2 b1 c2 a2b b2b c1b"),
    (-1, "a1 b2 c2 a2b b2b c1b"),
    (1, "c1 a1b a2b b1b b2b c1b"),
    (1, "c2 a2b a2b b1b b2b c1b"),
    (-1, "c1 a1b a1b b2b b2b c1b"),
    (-1, "c2 a1b a2b b2b b2b c1b"),
    (-1, "a1 b1 b1 a1b c1b c1b"),
    (-1, "a1 b1 b2 a2b c1b c1b"),
    (1, "b1 a1b a2b b2b c1b c1b"),
    (1, "b2 a2b a2b b2b c1b c1b"),
    (1, "a2 a2 b1 b2 c1 c2b"),
    (-1, "a1 a2 b2 b2 c1 c2b"),
    (-1, "a2 a2 b1 b1 c2 c2b"),
    (1, "a1 a2 b1 b2 c2 c2b"),
    (-1, "a2 b1 c1 a1b b1b c2b"),
    (1, "a1 b2 c1 a1b b1b c2b"),
    (-2, "a1 b1 c2 a1b b1b c2b"),
    (1, "a2 b2 c1 a2b b1b c2b"),
    (-2, "a2 b1 c2 a2b b1b c2b"),
    (-1, "a1 b2 c2 a2b b1b c2b"),
    (-1, "c1 a1b a2b b1b b1b c2b"),
    (-1, "c2 a2b a2b b1b b1b c2b"),
    (-1, "a2 b2 c1 a1b b2b c2b"),
    (-1, "a2 b1 c2 a1b b2b c2b"),
    (-2, "a2 b2 c2 a2b b2b c2b"),
    (1, "c1 a1b a1b b1b b2b c2b"),
    (1, "c2 a1b a2b b1b b2b c2b"),
    (-1, "a2 b1 b1 a1b c1b c2b"),
    (-1, "a1 b1 b2 a1b c1b c2b"),
    (-1, "a2 b1 b2 a2b c1b c2b"),
    (-1, "a1 b2 b2 a2b c1b c2b"),
    (-1, "b1 a1b a2b b1b c1b c2b"),
    (-1, "b2 a2b a2b b1b c1b c2b"),
    (-1, "b1 a1b a1b b2b c1b c2b"),
    (-1, "b2 a1b a2b b2b c1b c2b"),
    (-1, "a2 b1 b2 a1b c2b c2b"),
    (-1, "a2 b2 b2 a2b c2b c2b"),
    (1, "b1 a1b a1b b1b c2b c2b"),
    (1, "b2 a1b a2b b1b c2b c2b"),
)


@dataclass(frozen=True)
class LinearCoefficients:
    q1: Quaternion
    q2: Quaternion
    q3: Quaternion

    @classmethod
    def from_complex(cls, a1, a2, b1, b2, c1, c2) -> "LinearCoefficients":
        return cls(Quaternion.from_complex_pair(a1, a2),
                   Quaternion.from_complex_pair(b1, b2),
                   Quaternion.from_complex_pair(c1, c2))

    def variables(self) -> dict[str, Gaussian]:
        (a1, a2), (b1, b2), (c1, c2) = (q.complex_pair() for q in (self.q1, self.q2, self.q3))
        values = {"a1": a1, "a2": a2, "b1": b1, "b2": b2, "c1": c1, "c2": c2}
        values.update({k + "b": v.conjugate() for k, v in list(values.items())})
        return values

    def scaled(self, t) -> "LinearCoefficients":
        t = Fraction(t)
        return LinearCoefficients(self.q1 * t, self.q2 * t, self.q3 * t)


GENERATORS = (QFunction(Z1, Z2), QFunction(Z2, Z1), QFunction(Z1BAR, Z2BAR))


def linear_function(coeffs: LinearCoefficients) -> QFunction:
    """Right-module combination of the three generators."""
    total = QFunction()
    for gen, q in zip(GENERATORS, (coeffs.q1, coeffs.q2, coeffs.q3)):
        total = total + gen * q
    return total


def appendix_value_complex(coeffs: LinearCoefficients) -> Gaussian:
    values = coeffs.variables()
    total = Gaussian(0)
    for coef, factors in APPENDIX_TERMS:
        term = Gaussian(coef)
        for name in factors.split():
            term = term * values[name]
        total = total + term
    return total


def appendix_value(coeffs: LinearCoefficients) -> Fraction:
    """Evaluate the published expression; the result is always real."""
    v = appendix_value_complex(coeffs)
    if v.im != 0:
        raise ValueError(f"appendix polynomial returned a non-real value {v}")
    return v.re


class AppendixMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class AppendixCheck:
    appendix: Fraction
    criterion: Fraction

    @property
    def agrees(self) -> bool:
        return self.appendix == self.criterion


def appendix_consistency(coeffs: LinearCoefficients, strict: bool = True) -> AppendixCheck:
    """Compare the published polynomial with det(A - (tr A) I)/16 on the unit ball."""
    em = matrix_A(linear_function(coeffs), UNIT_BALL)
    check = AppendixCheck(appendix_value(coeffs), em.shifted_det / 16)
    if strict and not check.agrees:
        raise AppendixMismatch(
            f"appendix value {check.appendix} != det(A - (tr A) I)/16 = {check.criterion}")
    return check
