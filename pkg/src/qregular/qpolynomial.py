"""Polynomials in z1, z1bar, z2, z2bar and quaternionic functions f1 + f2 j.

A monomial is keyed by its exponent tuple (a, b, c, d) meaning
z1^a * z1bar^b * z2^c * z2bar^d.  The four variables are treated as
independent symbols, so Wirtinger derivatives are formal partials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .gaussian import Gaussian
from .hstructures import Quaternion

Exponent = tuple[int, int, int, int]

VARIABLES = ("z1", "z1bar", "z2", "z2bar")
_VAR_INDEX = {name: k for k, name in enumerate(VARIABLES)}
# conjugation pairs z1 <-> z1bar, z2 <-> z2bar
_CONJ_SLOT = (1, 0, 3, 2)


def _conj_exp(e: Exponent) -> Exponent:
    return (e[1], e[0], e[3], e[2])


class CPoly:
    """Sparse polynomial with Gaussian-rational coefficients.

    Instances are treated as immutable; every operation returns a new one.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        clean: dict[Exponent, Gaussian] = {}
        if terms:
            for e, c in terms.items():
                c = Gaussian.coerce(c)
                if not c.is_zero():
                    clean[tuple(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "CPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "CPoly":
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> "CPoly":
        e = [0, 0, 0, 0]
        e[_VAR_INDEX[name]] = 1
        return cls({tuple(e): 1})

    @classmethod
    def monomial(cls, exponent: Exponent, coeff=1) -> "CPoly":
        return cls({tuple(exponent): coeff})

    @property
    def terms(self) -> dict[Exponent, Gaussian]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def coeff(self, exponent: Exponent) -> Gaussian:
        return self._terms.get(tuple(exponent), Gaussian(0))

    def constant_term(self) -> Gaussian:
        return self.coeff((0, 0, 0, 0))

    def is_constant(self) -> bool:
        return all(e == (0, 0, 0, 0) for e in self._terms)

    # ring structure
    @staticmethod
    def _lift(x) -> "CPoly":
        if isinstance(x, CPoly):
            return x
        if isinstance(x, (int, Fraction, Gaussian)):
            return CPoly.constant(x)
        raise TypeError(f"cannot use {type(x).__name__} as a polynomial")

    def __add__(self, other):
        try:
            other = CPoly._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return CPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return CPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = CPoly._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return CPoly._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Gaussian)):
            return self.scale(other)
        if not isinstance(other, CPoly):
            return NotImplemented
        out: dict[Exponent, Gaussian] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return CPoly._raw({e: c for e, c in out.items() if not c.is_zero()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Gaussian)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = CPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c) -> "CPoly":
        c = Gaussian.coerce(c)
        if c.is_zero():
            return CPoly()
        return CPoly._raw({e: v * c for e, v in self._terms.items()})

    def conj(self) -> "CPoly":
        return CPoly._raw({_conj_exp(e): c.conjugate() for e, c in self._terms.items()})

    def is_real(self) -> bool:
        """True when the polynomial takes real values, i.e. equals its conjugate."""
        return self == self.conj()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Gaussian)):
            other = CPoly.constant(other)
        if not isinstance(other, CPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def substitute_slots(self, perm: tuple[int, int, int, int]) -> "CPoly":
        """Rename variables: exponent slot k moves to slot perm[k]."""
        out = {}
        for e, c in self._terms.items():
            ne = [0, 0, 0, 0]
            for k in range(4):
                ne[perm[k]] += e[k]
            out[tuple(ne)] = c
        return CPoly(out)

    def evaluate(self, z1, z2):
        """Evaluate at complex (or numpy complex array) points."""
        z1b, z2b = np.conjugate(z1), np.conjugate(z2)
        total = 0
        for (a, b, c, d), coef in self._terms.items():
            total = total + complex(coef) * z1 ** a * z1b ** b * z2 ** c * z2b ** d
        return total

    def __repr__(self):
        return f"CPoly({self.to_string()!r})"

    def to_string(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e in sorted(self._terms, key=lambda e: (sum(e), e)):
            c = self._terms[e]
            mono = _monomial_string(e)
            coef = _coeff_string(c)
            if not mono:
                pieces.append(coef)
            elif c == 1:
                pieces.append(mono)
            else:
                pieces.append(f"{coef}*{mono}")
        return " + ".join(pieces)

    __str__ = to_string


def _coeff_string(c: Gaussian) -> str:
    if c.im == 0:
        return _rat_string(c.re)
    if c.re == 0:
        return f"({_rat_string(c.im)}*i)" if c.im != 1 else "i"
    return f"({_rat_string(c.re)} + {_rat_string(c.im)}*i)"


def _rat_string(r: Fraction) -> str:
    return f"({r})" if (r.denominator != 1 or r < 0) else str(r)


def _monomial_string(e: Exponent) -> str:
    names = ("z1", "conj(z1)", "z2", "conj(z2)")
    out = []
    for name, k in zip(names, e):
        if k == 1:
            out.append(name)
        elif k > 1:
            out.append(f"{name}^{k}")
    return "*".join(out)


Z1 = CPoly.var("z1")
Z1BAR = CPoly.var("z1bar")
Z2 = CPoly.var("z2")
Z2BAR = CPoly.var("z2bar")


def poly_add(p: CPoly, q: CPoly) -> CPoly:
    return p + q


def poly_mul(p: CPoly, q: CPoly) -> CPoly:
    return p * q


def poly_conj(p: CPoly) -> CPoly:
    return p.conj()


def poly_scale(p: CPoly, c) -> CPoly:
    return p.scale(c)


def wirtinger(p: CPoly, var: str) -> CPoly:
    """Formal partial derivative in one of z1, z1bar, z2, z2bar."""
    k = _VAR_INDEX[var]
    out = {}
    for e, c in p.items():
        if e[k]:
            ne = list(e)
            ne[k] -= 1
            out[tuple(ne)] = c * e[k]
    return CPoly._raw(out)


def laplacian(p: CPoly) -> CPoly:
    """Euclidean Laplacian 4(d^2/dz1 dz1bar + d^2/dz2 dz2bar)."""
    return (wirtinger(wirtinger(p, "z1"), "z1bar")
            + wirtinger(wirtinger(p, "z2"), "z2bar")).scale(4)


def real_partial(p: CPoly, axis: int) -> CPoly:
    """d/dx_axis in real coordinates x0..x3."""
    plain, bar = ("z1", "z1bar") if axis < 2 else ("z2", "z2bar")
    dp, dbar = wirtinger(p, plain), wirtinger(p, bar)
    if axis % 2 == 0:
        return dp + dbar
    return (dp - dbar).scale(Gaussian(0, 1))


class QFunction:
    """Quaternion-valued polynomial function f = f1 + f2 j (normal form)."""

    __slots__ = ("f1", "f2")

    def __init__(self, f1=None, f2=None):
        self.f1 = CPoly._lift(f1) if f1 is not None else CPoly()
        self.f2 = CPoly._lift(f2) if f2 is not None else CPoly()

    @classmethod
    def constant(cls, q: Quaternion) -> "QFunction":
        a, b = q.complex_pair()
        return cls(CPoly.constant(a), CPoly.constant(b))

    @classmethod
    def identity(cls) -> "QFunction":
        return cls(Z1, Z2)

    def __add__(self, other):
        other = _lift_q(other)
        if other is None:
            return NotImplemented
        return QFunction(self.f1 + other.f1, self.f2 + other.f2)

    __radd__ = __add__

    def __neg__(self):
        return QFunction(-self.f1, -self.f2)

    def __sub__(self, other):
        other = _lift_q(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _lift_q(other) - self

    def __mul__(self, other):
        # (f1 + f2 j)(g1 + g2 j) = (f1 g1 - f2 conj(g2)) + (f1 g2 + f2 conj(g1)) j
        other = _lift_q(other)
        if other is None:
            return NotImplemented
        g1, g2 = other.f1, other.f2
        return QFunction(self.f1 * g1 - self.f2 * g2.conj(),
                         self.f1 * g2 + self.f2 * g1.conj())

    def __rmul__(self, other):
        other = _lift_q(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = QFunction.constant(Quaternion(1))
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, QFunction):
            return NotImplemented
        return self.f1 == other.f1 and self.f2 == other.f2

    def __hash__(self):
        return hash((self.f1, self.f2))

    def is_zero(self) -> bool:
        return self.f1.is_zero() and self.f2.is_zero()

    def is_constant(self) -> bool:
        return self.f1.is_constant() and self.f2.is_constant()

    def degree(self) -> int:
        return max(self.f1.degree(), self.f2.degree())

    def components(self) -> tuple[CPoly, CPoly, CPoly, CPoly]:
        """Real components (u0, u1, u2, u3) with f = u0 + i u1 + j u2 + k u3."""
        half = Fraction(1, 2)
        minus_half_i = Gaussian(0, Fraction(-1, 2))
        f1b, f2b = self.f1.conj(), self.f2.conj()
        return ((self.f1 + f1b).scale(half), (self.f1 - f1b).scale(minus_half_i),
                (self.f2 + f2b).scale(half), (self.f2 - f2b).scale(minus_half_i))

    @classmethod
    def from_components(cls, u0, u1, u2, u3) -> "QFunction":
        i = Gaussian(0, 1)
        return cls(u0 + u1.scale(i), u2 + u3.scale(i))

    def evaluate(self, z1, z2):
        """Numeric value (f1, f2) at complex points; f = f1 + f2 j there."""
        return self.f1.evaluate(z1, z2), self.f2.evaluate(z1, z2)

    def evaluate_real(self, x) -> np.ndarray:
        """Numeric real components (u0, u1, u2, u3) at a point x in R^4."""
        v1, v2 = self.evaluate(complex(x[0], x[1]), complex(x[2], x[3]))
        v1, v2 = complex(v1), complex(v2)
        return np.array([v1.real, v1.imag, v2.real, v2.imag])

    def __repr__(self):
        return f"QFunction({self.to_string()!r})"

    def to_string(self) -> str:
        if self.f2.is_zero():
            return self.f1.to_string()
        head = "" if self.f1.is_zero() else f"{self.f1.to_string()} + "
        return f"{head}({self.f2.to_string()})*j"

    __str__ = to_string


def _lift_q(x) -> QFunction | None:
    if isinstance(x, QFunction):
        return x
    if isinstance(x, Quaternion):
        return QFunction.constant(x)
    if isinstance(x, (CPoly, int, Fraction, Gaussian)):
        return QFunction(CPoly._lift(x), CPoly())
    return None


def qfun_right_mul(f: QFunction, q: Quaternion) -> QFunction:
    return f * QFunction.constant(q)


def qfun_left_mul(q: Quaternion, f: QFunction) -> QFunction:
    return QFunction.constant(q) * f


# JacobianC rows: (f1bar, f1, f2bar, f2); columns: (z1bar, z1, z2bar, z2)
_COLUMN_VARS = ("z1bar", "z1", "z2bar", "z2")


def jacobian_complex(f: QFunction) -> np.ndarray:
    rows = (f.f1.conj(), f.f1, f.f2.conj(), f.f2)
    m = np.array([[wirtinger(r, v) for v in _COLUMN_VARS] for r in rows], dtype=object)
    m.flags.writeable = False
    return m


def jacobian_real(f: QFunction) -> np.ndarray:
    """Entries d u_a / d x_b as real-valued polynomials."""
    comps = f.components()
    m = np.array([[real_partial(u, b) for b in range(4)] for u in comps], dtype=object)
    m.flags.writeable = False
    return m


def matrix_rank_at(m: np.ndarray) -> int:
    """Rank of a constant polynomial matrix (e.g. the Jacobian of an affine map)."""
    from sympy import I as SI, Matrix, Rational

    def to_sympy(p: CPoly):
        if not p.is_constant():
            raise ValueError("matrix entries must be constant")
        c = p.constant_term()
        return Rational(c.re.numerator, c.re.denominator) + SI * Rational(c.im.numerator, c.im.denominator)

    return Matrix([[to_sympy(x) for x in row] for row in m]).rank()


def reflect_x3(f: QFunction) -> QFunction:
    """Pullback of f under x3 -> -x3 (z2 <-> z2bar)."""
    perm = (0, 1, 3, 2)
    return QFunction(f.f1.substitute_slots(perm), f.f2.substitute_slots(perm))


def polys_of(items: Iterable) -> list[CPoly]:
    return [CPoly._lift(x) for x in items]
