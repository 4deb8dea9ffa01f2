"""Exact checks for the first-order operators acting on QFunctions.

Two independent routes are kept on purpose: the Cauchy-Riemann form in
Wirtinger derivatives and the real-coordinate form built from the real
Jacobian and quaternion left multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hstructures import (ImaginaryDirection, UNITS, left_mult_matrix, structure_J,
                          structure_Jp, target_L, target_Lw)
from .qpolynomial import CPoly, QFunction, jacobian_real, laplacian, reflect_x3, wirtinger


@dataclass(frozen=True)
class RegularityVerdict:
    fueter_regular: bool
    psi_regular: bool
    residual: QFunction


@dataclass(frozen=True)
class CheckResult:
    holds: bool
    residual: QFunction | None = None

    def __bool__(self):
        return self.holds


def _zero_matrix(m: np.ndarray) -> bool:
    return all(CPoly._lift(x).is_zero() for x in m.flat)


def psi_residual(f: QFunction) -> QFunction:
    """D'f written through Wirtinger derivatives.

    D'f = 2(d f1/dz1bar - d f2bar/dz2) + 2(d f2/dz1bar + d f1bar/dz2) j
    """
    f1b, f2b = f.f1.conj(), f.f2.conj()
    r1 = wirtinger(f.f1, "z1bar") - wirtinger(f2b, "z2")
    r2 = wirtinger(f.f2, "z1bar") + wirtinger(f1b, "z2")
    return QFunction(r1.scale(2), r2.scale(2))


def dirac_real(f: QFunction, k_sign: int) -> QFunction:
    """sum_a e_a * df/dx_a in real coordinates, with the k-term scaled by k_sign.

    k_sign=+1 is the Fueter operator D, k_sign=-1 is D'.
    """
    jac = jacobian_real(f)
    signs = (1, 1, 1, k_sign)
    out = [CPoly()] * 4
    for a, unit in enumerate(UNITS):
        column = jac[:, a]
        image = left_mult_matrix(unit) @ column
        out = [o + CPoly._lift(v).scale(signs[a]) for o, v in zip(out, image)]
    return QFunction.from_components(*out)


def check_psi(f: QFunction) -> CheckResult:
    """psi-regularity via the two Cauchy-Riemann type equations."""
    f1b, f2b = f.f1.conj(), f.f2.conj()
    eq1 = wirtinger(f.f1, "z1bar") - wirtinger(f2b, "z2")
    eq2 = wirtinger(f.f1, "z2bar") + wirtinger(f2b, "z1")
    holds = eq1.is_zero() and eq2.is_zero()
    return CheckResult(holds, None if holds else psi_residual(f))


def check_fueter(f: QFunction) -> CheckResult:
    """Fueter regularity: f is regular iff its x3-reflection is psi-regular."""
    reflected = check_psi(reflect_x3(f))
    if reflected.holds:
        return CheckResult(True)
    return CheckResult(False, reflect_x3(reflected.residual))


def regularity_verdict(f: QFunction) -> RegularityVerdict:
    psi = check_psi(f)
    return RegularityVerdict(fueter_regular=check_fueter(f).holds,
                             psi_regular=psi.holds,
                             residual=psi_residual(f))


def check_q_holomorphic(f: QFunction) -> CheckResult:
    """df + i J1*(df) + j J2*(df) + k J3*(df) = 0, as real 4x4 matrices."""
    jac = jacobian_real(f)
    total = jac.copy()
    for alpha in (1, 2, 3):
        total = total + target_L(alpha) @ jac @ structure_J(alpha)
    holds = _zero_matrix(total)
    return CheckResult(holds, None if holds else psi_residual(f))


def check_holomorphic_p(f: QFunction, w) -> CheckResult:
    """Membership in Hol_p for p = w/|w|, using the cleared equation

    |w|^2 df + L_w df J_w = 0.
    """
    w = ImaginaryDirection.of(w)
    jac = jacobian_real(f)
    total = w.norm2() * jac + target_Lw(w) @ jac @ structure_Jp(w)
    holds = _zero_matrix(total)
    if holds:
        return CheckResult(True)
    return CheckResult(False, QFunction.from_components(*(CPoly._lift(x) for x in total[:, 0])))


def check_harmonic(f: QFunction) -> CheckResult:
    l1, l2 = laplacian(f.f1), laplacian(f.f2)
    holds = l1.is_zero() and l2.is_zero()
    return CheckResult(holds, None if holds else QFunction(l1, l2))


def is_holomorphic_standard(p: CPoly) -> bool:
    """Both conjugate Wirtinger derivatives vanish."""
    return wirtinger(p, "z1bar").is_zero() and wirtinger(p, "z2bar").is_zero()
