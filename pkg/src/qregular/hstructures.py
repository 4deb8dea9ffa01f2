"""Quaternions and the exact matrices of the hypercomplex structure on H.

Real coordinates are ordered (x0, x1, x2, x3) for q = x0 + i x1 + j x2 + k x3,
i.e. z1 = x0 + i x1 and z2 = x2 + i x3 with q = z1 + z2 j.

Complex 1-forms are ordered (dz1bar, dz1, dz2bar, dz2).  A structure matrix
``M`` acts on coordinate columns: ``M @ coords(w) == coords(J*(w))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .gaussian import Gaussian


def _F(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Quaternion:
    x0: Fraction = Fraction(0)
    x1: Fraction = Fraction(0)
    x2: Fraction = Fraction(0)
    x3: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("x0", "x1", "x2", "x3"):
            object.__setattr__(self, name, _F(getattr(self, name)))

    @classmethod
    def from_complex_pair(cls, a, b) -> "Quaternion":
        """Build a + b j from two Gaussian rationals."""
        a, b = Gaussian.coerce(a), Gaussian.coerce(b)
        return cls(a.re, a.im, b.re, b.im)

    def complex_pair(self) -> tuple[Gaussian, Gaussian]:
        return Gaussian(self.x0, self.x1), Gaussian(self.x2, self.x3)

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.x0, self.x1, self.x2, self.x3)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(*(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(*(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Quaternion":
        return Quaternion(*(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(*(a * other for a in self.coords))
        if not isinstance(other, Quaternion):
            return NotImplemented
        return quat_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(*(a * other for a in self.coords))
        return NotImplemented

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3)

    def norm2(self) -> Fraction:
        return sum((a * a for a in self.coords), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        parts = []
        for c, unit in zip(self.coords, ("", "i", "j", "k")):
            if c:
                parts.append(f"{c}{'*' + unit if unit else ''}")
        return " + ".join(parts) if parts else "0"


ONE = Quaternion(1)
QI = Quaternion(0, 1)
QJ = Quaternion(0, 0, 1)
QK = Quaternion(0, 0, 0, 1)
UNITS = (ONE, QI, QJ, QK)


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product a*b."""
    a0, a1, a2, a3 = a.coords
    b0, b1, b2, b3 = b.coords
    return Quaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


@dataclass(frozen=True)
class ImaginaryDirection:
    """An unnormalized nonzero w in R^3 standing for p = (w1 i + w2 j + w3 k)/|w|."""

    w1: Fraction
    w2: Fraction
    w3: Fraction

    def __post_init__(self):
        for name in ("w1", "w2", "w3"):
            object.__setattr__(self, name, _F(getattr(self, name)))
        if self.norm2() == 0:
            raise ValueError("direction must be nonzero")

    @classmethod
    def of(cls, w) -> "ImaginaryDirection":
        if isinstance(w, ImaginaryDirection):
            return w
        return cls(*w)

    @property
    def components(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.w1, self.w2, self.w3)

    def norm2(self) -> Fraction:
        return self.w1 ** 2 + self.w2 ** 2 + self.w3 ** 2

    def quaternion(self) -> Quaternion:
        return Quaternion(0, self.w1, self.w2, self.w3)

    def __neg__(self) -> "ImaginaryDirection":
        return ImaginaryDirection(-self.w1, -self.w2, -self.w3)


def _frozen(rows, dtype=object) -> np.ndarray:
    m = np.array(rows, dtype=dtype)
    m.flags.writeable = False
    return m


def identity4() -> np.ndarray:
    return _frozen([[Fraction(int(r == c)) for c in range(4)] for r in range(4)])


def left_mult_matrix(q: Quaternion) -> np.ndarray:
    """Real 4x4 matrix of v -> q*v in (x0, x1, x2, x3) coordinates."""
    cols = [quat_mul(q, e).coords for e in UNITS]
    return _frozen([[cols[c][r] for c in range(4)] for r in range(4)])


_J1 = left_mult_matrix(QI)
_J2 = left_mult_matrix(QJ)
# J3 = -J1 J2 (not left multiplication by k)
_J3 = _frozen(-(_J1 @ _J2))
_STRUCTURES = {1: _J1, 2: _J2, 3: _J3}


def structure_J(alpha: int) -> np.ndarray:
    """Real matrix of the complex structure J_alpha on T H."""
    try:
        return _STRUCTURES[alpha]
    except KeyError:
        raise ValueError(f"structure index must be 1, 2 or 3, got {alpha}") from None


def target_L(beta: int) -> np.ndarray:
    """Left multiplication by i, j, k on the target (L_{i_beta})."""
    if beta not in (1, 2, 3):
        raise ValueError(f"structure index must be 1, 2 or 3, got {beta}")
    return left_mult_matrix(UNITS[beta])


def structure_Jp(w) -> np.ndarray:
    """Unnormalized w1 J1 + w2 J2 + w3 J3; squares to -|w|^2 Id."""
    w = ImaginaryDirection.of(w)
    return _frozen(w.w1 * _J1 + w.w2 * _J2 + w.w3 * _J3)


def target_Lw(w) -> np.ndarray:
    """Unnormalized left multiplication by w1 i + w2 j + w3 k."""
    return left_mult_matrix(ImaginaryDirection.of(w).quaternion())


def _dual_matrix(images: dict[int, dict[int, Gaussian]]) -> np.ndarray:
    m = [[Gaussian(0)] * 4 for _ in range(4)]
    for col, image in images.items():
        for row, c in image.items():
            m[row][col] = c
    return _frozen(m)


# basis slots: 0 = dz1bar, 1 = dz1, 2 = dz2bar, 3 = dz2
_ii = Gaussian(0, 1)
_M1 = _dual_matrix({0: {0: -_ii}, 1: {1: _ii}, 2: {2: -_ii}, 3: {3: _ii}})
# J2* dz1 = -dz2bar, J2* dz2 = dz1bar, barred forms by conjugation
_M2 = _dual_matrix({0: {3: Gaussian(-1)}, 1: {2: Gaussian(-1)},
                    2: {1: Gaussian(1)}, 3: {0: Gaussian(1)}})
# J3* dz1 = i dz2bar, J3* dz2 = -i dz1bar
_M3 = _dual_matrix({0: {3: -_ii}, 1: {2: _ii}, 2: {1: _ii}, 3: {0: -_ii}})
_DUALS = {1: _M1, 2: _M2, 3: _M3}


def structure_M(alpha: int) -> np.ndarray:
    """Complex matrix of J*_alpha on span{dz1bar, dz1, dz2bar, dz2}."""
    try:
        return _DUALS[alpha]
    except KeyError:
        raise ValueError(f"structure index must be 1, 2 or 3, got {alpha}") from None


def conj_matrix(m: np.ndarray) -> np.ndarray:
    return np.vectorize(lambda x: x.conjugate(), otypes=[object])(m)


def matrices_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))
