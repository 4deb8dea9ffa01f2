"""Exact analysis of psi-regular quaternionic polynomials and their complex structures."""

from .ballintegrals import UNIT_BALL, DomainSpec, integrate_monomial, integrate_poly
from .criterion import (EnergyMatrix, Classification, classify, energy, invariant_I,
                        invariant_I_p, invariant_K, matrix_A, perturb_fixed_boundary)
from .gaussian import Gaussian
from .hstructures import ImaginaryDirection, Quaternion, quat_mul
from .parser import parse_function
from .qpolynomial import CPoly, QFunction
from .regularity import (check_fueter, check_harmonic, check_holomorphic_p, check_psi,
                         check_q_holomorphic)
from .report import AnalysisReport, analyze

__all__ = [
    "AnalysisReport", "CPoly", "Classification", "DomainSpec", "EnergyMatrix", "Gaussian",
    "ImaginaryDirection", "QFunction", "Quaternion", "UNIT_BALL", "analyze", "check_fueter",
    "check_harmonic", "check_holomorphic_p", "check_psi", "check_q_holomorphic", "classify",
    "energy", "integrate_monomial", "integrate_poly", "invariant_I", "invariant_I_p",
    "invariant_K", "matrix_A", "parse_function", "perturb_fixed_boundary", "quat_mul",
]
