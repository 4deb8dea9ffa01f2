"""Energy, the 3x3 energy matrix A, and the holomorphicity classification.

Conventions (all integrals volume-normalized, see ``ballintegrals``):

* ``df`` is the real Jacobian ``D``; ``|.|`` is the Frobenius norm.
* pointwise pairing  <J_alpha, f*L_beta> = 1/2 <D, L_beta D J_alpha>_F
* a_{alpha beta} = -avg <J_alpha, f*L_beta>
* E = 1/2 avg |D|^2,   K = avg sum_alpha <J_alpha, f*L_alpha> = -tr A
* I = 1/2 avg |D + sum_alpha L_alpha D J_alpha|^2,   so E + K = I/4
* I_p = avg |D + L_p D J_p|^2,   so X A X^T = E - I_p/4 for X = p
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .ballintegrals import UNIT_BALL, DomainSpec, integrate_poly, integrate_real
from .exactlinalg import char_poly3, cross, det3, nullspace, primitive_integer_vector
from .hstructures import (ImaginaryDirection, structure_J, structure_Jp, structure_M,
                          target_L, target_Lw)
from .qpolynomial import CPoly, QFunction, Z1, Z1BAR, Z2, Z2BAR, jacobian_complex, jacobian_real
from .regularity import check_holomorphic_p

HALF = Fraction(1, 2)

TYPE_I = "I_constant"
TYPE_II = "II_circle"
TYPE_III = "III_pair"
TYPE_IV = "IV_empty"
NOT_PSI_REGULAR = "not_psi_regular"


class CriterionError(RuntimeError):
    """Internal inconsistency between the energy matrix and a direct check."""


def _frobenius(x: np.ndarray, y: np.ndarray) -> CPoly:
    total = CPoly()
    for a, b in zip(x.flat, y.flat):
        total = total + CPoly._lift(a) * CPoly._lift(b)
    return total


def _trace_conj_product(b: np.ndarray, c: np.ndarray) -> CPoly:
    """tr(conj(B)^T C) for polynomial matrices."""
    total = CPoly()
    for x, y in zip(b.flat, c.flat):
        total = total + CPoly._lift(x).conj() * CPoly._lift(y)
    return total


def energy(f: QFunction, domain: DomainSpec = UNIT_BALL) -> Fraction:
    """Dirichlet energy 1/2 avg tr(J_C conj(J_C)^T)."""
    jc = jacobian_complex(f)
    return HALF * integrate_real(_trace_conj_product(jc, jc), domain)


def energy_real(f: QFunction, domain: DomainSpec = UNIT_BALL) -> Fraction:
    jr = jacobian_real(f)
    return HALF * integrate_real(_frobenius(jr, jr), domain)


def pairing(f: QFunction, alpha: int, beta: int, domain: DomainSpec = UNIT_BALL) -> Fraction:
    """avg <J_alpha, f*L_beta>, computed in real coordinates."""
    jr = jacobian_real(f)
    image = target_L(beta) @ jr @ structure_J(alpha)
    return HALF * integrate_real(_frobenius(jr, image), domain)


@dataclass(frozen=True)
class EnergyMatrix:
    A: tuple[tuple[Fraction, ...], ...]
    energy: Fraction
    trace: Fraction = field(init=False)
    shifted_det: Fraction = field(init=False)
    char_poly_shifted: tuple[Fraction, ...] = field(init=False)

    def __post_init__(self):
        a = self.A
        tr = a[0][0] + a[1][1] + a[2][2]
        object.__setattr__(self, "trace", tr)
        shifted = self.shifted()
        object.__setattr__(self, "shifted_det", det3(shifted))
        # det(A - (tr A) I - t I)
        object.__setattr__(self, "char_poly_shifted", char_poly3(shifted))

    def shifted(self) -> list[list[Fraction]]:
        tr = self.A[0][0] + self.A[1][1] + self.A[2][2]
        return [[self.A[r][c] - (tr if r == c else 0) for c in range(3)] for r in range(3)]

    def is_symmetric(self) -> bool:
        return all(self.A[r][c] == self.A[c][r] for r in range(3) for c in range(3))

    def quadratic_form(self, x) -> Fraction:
        return sum((Fraction(x[r]) * Fraction(x[c]) * self.A[r][c]
                    for r in range(3) for c in range(3)), Fraction(0))

    def as_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.A])

    def eigenvalues(self) -> np.ndarray:
        """Floating-point eigenvalues, descending; for display only."""
        m = self.as_numpy()
        vals = np.linalg.eigvalsh(m) if self.is_symmetric() else np.linalg.eigvals(m).real
        return np.sort(vals)[::-1]


def matrix_A(f: QFunction, domain: DomainSpec = UNIT_BALL) -> EnergyMatrix:
    """Energy matrix via B_alpha = M_alpha J_C^T and C_beta = +-J_C^T M_beta.

    a_{alpha beta} = 1/2 avg tr(conj(B_alpha)^T C_beta).  Left multiplication
    by k on the target acts on (f1bar, f1, f2bar, f2) as -M_3, so the minus
    sign sits on C_3.
    """
    jc = jacobian_complex(f)
    jt = jc.T
    bs = {a: structure_M(a) @ jt for a in (1, 2, 3)}
    cs = {b: (jt @ structure_M(b)) * (-1 if b == 3 else 1) for b in (1, 2, 3)}
    rows = []
    for a in (1, 2, 3):
        row = []
        for b in (1, 2, 3):
            v = HALF * integrate_poly(_trace_conj_product(bs[a], cs[b]), domain)
            if v.im != 0:
                raise CriterionError(f"entry a[{a}][{b}] is not real: {v}")
            row.append(v.re)
        rows.append(tuple(row))
    return EnergyMatrix(tuple(rows), energy(f, domain))


def matrix_A_real(f: QFunction, domain: DomainSpec = UNIT_BALL) -> EnergyMatrix:
    """Energy matrix from the real pairing -avg <J_alpha, f*L_beta>."""
    rows = tuple(tuple(-pairing(f, a, b, domain) for b in (1, 2, 3)) for a in (1, 2, 3))
    return EnergyMatrix(rows, energy_real(f, domain))


def invariant_K(f: QFunction, domain: DomainSpec = UNIT_BALL) -> Fraction:
    return sum((pairing(f, a, a, domain) for a in (1, 2, 3)), Fraction(0))


def invariant_I(f: QFunction, domain: DomainSpec = UNIT_BALL) -> Fraction:
    jr = jacobian_real(f)
    total = jr.copy()
    for a in (1, 2, 3):
        total = total + target_L(a) @ jr @ structure_J(a)
    return HALF * integrate_real(_frobenius(total, total), domain)


def invariant_I_p(f: QFunction, w, domain: DomainSpec = UNIT_BALL) -> Fraction:
    """avg |df + L_p df J_p|^2 with p = w/|w| folded in exactly."""
    w = ImaginaryDirection.of(w)
    n = w.norm2()
    jr = jacobian_real(f)
    total = n * jr + target_Lw(w) @ jr @ structure_Jp(w)
    return integrate_real(_frobenius(total, total), domain) / (n * n)


@dataclass(frozen=True)
class Classification:
    type: str
    structure_set: str
    directions: tuple[tuple[int, int, int], ...] = ()
    normal: tuple[int, int, int] | None = None

    def describe(self) -> str:
        if self.structure_set == "none":
            return "f is not psi-regular; J(f) undefined"
        if self.structure_set == "empty":
            return "J(f) is empty"
        if self.structure_set == "pair":
            return f"J(f) = {{+p, -p}} with p parallel to w = {self.directions[0]}"
        if self.structure_set == "circle":
            return (f"J(f) is the great circle orthogonal to {self.normal}, "
                    f"spanned by {self.directions[0]} and {self.directions[1]}")
        return "J(f) is the whole sphere S^2"


def _verify(f: QFunction, directions) -> None:
    for w in directions:
        if not check_holomorphic_p(f, w):
            raise CriterionError(f"direction {w} from the energy matrix fails the direct check")


def classify(f: QFunction, domain: DomainSpec = UNIT_BALL,
             em: EnergyMatrix | None = None) -> Classification:
    """Decide the type of J(f) from the exact energy matrix."""
    if em is None:
        em = matrix_A(f, domain)
    if em.energy != em.trace:
        return Classification(NOT_PSI_REGULAR, "none")
    if not em.is_symmetric():
        raise CriterionError("energy matrix of a psi-regular function is not symmetric")
    if em.shifted_det != 0:
        return Classification(TYPE_IV, "empty")
    kernel = [primitive_integer_vector(v) for v in nullspace(em.shifted())]
    if len(kernel) == 1:
        _verify(f, kernel)
        return Classification(TYPE_III, "pair", (kernel[0],))
    if len(kernel) == 2:
        u, v = kernel
        combo = tuple(a + b for a, b in zip(u, v))
        _verify(f, (u, v, combo))
        normal = primitive_integer_vector(cross(u, v))
        return Classification(TYPE_II, "circle", (u, v), normal)
    if any(any(row) for row in em.A) or em.energy != 0:
        raise CriterionError("three-dimensional kernel with nonzero energy matrix")
    basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    _verify(f, basis)
    return Classification(TYPE_I, "sphere", basis)


def perturb_fixed_boundary(f: QFunction, g: QFunction) -> QFunction:
    """u = f + (1 - |z1|^2 - |z2|^2) g, equal to f on the unit sphere."""
    bump = CPoly.constant(1) - Z1 * Z1BAR - Z2 * Z2BAR
    return f + QFunction(bump) * g
