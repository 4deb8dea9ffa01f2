import random
from fractions import Fraction

import numpy as np
import pytest

from helpers import random_psi_regular, random_qfunction, random_quaternion
from qregular.ballintegrals import UNIT_BALL, DomainSpec, sample_domain
from qregular.criterion import (NOT_PSI_REGULAR, TYPE_I, TYPE_II, TYPE_III, TYPE_IV,
                                classify, energy, energy_real, invariant_I, invariant_I_p,
                                invariant_K, matrix_A, matrix_A_real, perturb_fixed_boundary)
from qregular.gaussian import Gaussian
from qregular.hstructures import Quaternion
from qregular.qpolynomial import CPoly, QFunction, Z1, Z1BAR, Z2, Z2BAR, qfun_right_mul
from qregular.regularity import check_holomorphic_p, check_psi

F = Fraction
IDENTITY = QFunction(Z1, Z2)
H = QFunction(Z1BAR, Z1 + Z2BAR)
EXAMPLE_1 = QFunction(Z1 + Z2 + Z1BAR, Z1 + Z2 + Z2BAR)
QUADRATIC = QFunction(Z1 * Z1BAR - Z2 * Z2BAR, Z1BAR * Z2BAR)
ODD_RANK = QFunction(Z1 + Z1BAR, Z2BAR)
ANTI = QFunction(Z1BAR, Z2BAR)


# ---- independent floating-point oracle ------------------------------------

def _qmul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return np.array([a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                     a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                     a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                     a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0])


def _left(u):
    return np.column_stack([_qmul(u, e) for e in np.eye(4)])


L_FLOAT = [_left(u) for u in np.eye(4)[1:]]
J_FLOAT = [L_FLOAT[0], L_FLOAT[1], -L_FLOAT[0] @ L_FLOAT[1]]


def numeric_jacobians(f, pts, h=1e-5):
    def values(p):
        z1 = p[:, 0] + 1j * p[:, 1]
        z2 = p[:, 2] + 1j * p[:, 3]
        v1 = np.broadcast_to(np.asarray(f.f1.evaluate(z1, z2), dtype=complex), len(p))
        v2 = np.broadcast_to(np.asarray(f.f2.evaluate(z1, z2), dtype=complex), len(p))
        return np.stack([v1.real, v1.imag, v2.real, v2.imag], axis=1)
    cols = []
    for b in range(4):
        step = np.zeros(4)
        step[b] = h
        cols.append((values(pts + step) - values(pts - step)) / (2 * h))
    return np.stack(cols, axis=2)  # (n, component, axis)


def numeric_A(f, samples=100_000, seed=0):
    pts = sample_domain(UNIT_BALL, samples, np.random.default_rng(seed))
    d = numeric_jacobians(f, pts)
    a = np.zeros((3, 3))
    se = np.zeros((3, 3))
    for r in range(3):
        for c in range(3):
            image = np.einsum("ij,njk,kl->nil", L_FLOAT[c], d, J_FLOAT[r])
            dens = -0.5 * np.einsum("nij,nij->n", d, image)
            a[r, c] = dens.mean()
            se[r, c] = dens.std() / np.sqrt(samples)
    energy_dens = 0.5 * np.einsum("nij,nij->n", d, d)
    return a, se, energy_dens.mean(), energy_dens.std() / np.sqrt(samples)


def as_float(em):
    return np.array([[float(x) for x in row] for row in em.A])


@pytest.mark.parametrize("f", [IDENTITY, H, EXAMPLE_1, QUADRATIC, QFunction(Z1BAR),
                               QFunction(Z1 * Z2BAR, Z1 ** 2 - Z2)])
def test_matrix_A_against_float_oracle(f):
    a, se, e, e_se = numeric_A(f)
    em = matrix_A(f)
    assert np.all(np.abs(a - as_float(em)) <= 4 * se + 1e-6)
    assert abs(e - float(em.energy)) <= 4 * e_se + 1e-6


# ---- published values -----------------------------------------------------

def test_energy_examples():
    assert energy(EXAMPLE_1) == 6
    assert energy(H) == 3
    assert energy(QUADRATIC) == 2


def test_matrix_A_examples():
    assert matrix_A(EXAMPLE_1).A == ((2, 0, 0), (0, 2, 0), (0, 0, 2))
    assert matrix_A(H).A == ((-1, 0, 2), (0, 2, 0), (2, 0, 2))
    assert matrix_A(QUADRATIC).A == ((F(-2, 3), 0, 0), (0, F(4, 3), 0), (0, 0, F(4, 3)))


def test_two_routes_to_A_agree():
    rng = random.Random(17)
    for _ in range(40):
        f = random_qfunction(rng, 3) if rng.random() < 0.5 else random_psi_regular(rng, 3)
        assert matrix_A(f) == matrix_A_real(f)
        assert energy(f) == energy_real(f)


def test_energy_nonnegative_and_zero_only_for_constants():
    rng = random.Random(5)
    for _ in range(30):
        f = random_qfunction(rng, 2)
        e = energy(f)
        assert e >= 0
        assert (e == 0) == f.is_constant()


def test_K_examples():
    assert invariant_K(IDENTITY) == -2
    assert invariant_K(QFunction.constant(Quaternion(1, 0, 0, 1))) == 0
    for f in (IDENTITY, H, EXAMPLE_1, QUADRATIC):
        assert invariant_K(f) == -energy(f) == -matrix_A(f).trace


def test_I_examples():
    for f in (IDENTITY, H, EXAMPLE_1, QUADRATIC):
        assert invariant_I(f) == 0
    assert invariant_I(QFunction.constant(Quaternion(2))) == 0
    g = QFunction(Z1BAR)
    # Df = diag(1, -1, 0, 0); evaluate the integrand with the float structures
    d = np.diag([1.0, -1.0, 0.0, 0.0])
    s = d + sum(L_FLOAT[a] @ d @ J_FLOAT[a] for a in range(3))
    assert invariant_I(g) == F(round(0.5 * float(np.sum(s * s))))
    assert invariant_I(g) == 4 * (energy(g) + invariant_K(g)) > 0


def test_I_p_examples():
    assert invariant_I_p(H, (1, 0, 2)) == 0
    assert invariant_I_p(IDENTITY, (0, 0, 1)) > 0
    with pytest.raises(ValueError):
        invariant_I_p(H, (0, 0, 0))


def test_I_p_invariant_under_scaling_direction():
    for w in ((1, 2, 3), (0, 1, -1)):
        scaled = tuple(5 * x for x in w)
        for f in (QUADRATIC, QFunction(Z1BAR)):
            assert invariant_I_p(f, w) == invariant_I_p(f, scaled)


def test_quadratic_form_identity():
    rng = random.Random(21)
    for f in (H, QUADRATIC, QFunction(Z1BAR), random_qfunction(rng, 2)):
        em = matrix_A(f)
        for w in ((1, 0, 2), (1, 1, 1), (0, -3, 4)):
            n = sum(F(x) ** 2 for x in w)
            xax = em.quadratic_form(w) / n
            assert xax == em.energy - invariant_I_p(f, w) / 4


# ---- classification -------------------------------------------------------

def test_classify_examples():
    assert classify(EXAMPLE_1).type == TYPE_IV
    c = classify(H)
    assert c.type == TYPE_III and c.directions == ((1, 0, 2),)
    c = classify(IDENTITY)
    assert c.type == TYPE_II and c.normal == (0, 0, 1)
    assert set(c.directions) == {(1, 0, 0), (0, 1, 0)}
    assert classify(QUADRATIC).type == TYPE_IV
    assert classify(ODD_RANK).type == TYPE_IV
    assert classify(QFunction(Z1BAR)).type == NOT_PSI_REGULAR
    c = classify(QFunction.constant(Quaternion(1, 0, 0, 1)))
    assert c.type == TYPE_I and c.structure_set == "sphere"


def test_anti_holomorphic_is_type_II_in_j_k_plane():
    c = classify(ANTI)
    assert c.type == TYPE_II and c.normal == (1, 0, 0)


def test_type_II_eigenvalue_pattern():
    rng = random.Random(12)
    for base in (IDENTITY, ANTI):
        f = qfun_right_mul(base, random_quaternion(rng) + Quaternion(1))
        em = matrix_A(f)
        assert classify(f, em=em).type == TYPE_II
        lam = sorted(em.eigenvalues())
        assert np.isclose(lam[1], lam[2]) and np.isclose(lam[0], -lam[2])


def test_type_I_has_zero_matrix():
    em = matrix_A(QFunction.constant(Quaternion(3, -1, 2, 5)))
    assert em.energy == 0 and all(x == 0 for row in em.A for x in row)


def test_right_multiples_of_identity_are_affine_type_II():
    # (a1 z1 - conj(a2) z2) + (a2 z1 + conj(a1) z2) j = (z1 + z2 j)(a1 + a2 j)
    rng = random.Random(30)
    for _ in range(10):
        a1 = Gaussian(rng.randint(-4, 4), rng.randint(-4, 4))
        a2 = Gaussian(rng.randint(-4, 4), rng.randint(-4, 4))
        if a1.is_zero() and a2.is_zero():
            continue
        f = QFunction(Z1.scale(a1) - Z2.scale(a2.conjugate()), Z1.scale(a2) + Z2.scale(a1.conjugate()))
        assert f == qfun_right_mul(IDENTITY, Quaternion.from_complex_pair(a1, a2))
        c = classify(f)
        assert c.type == TYPE_II
        for w in ((1, 0, 0), (0, 1, 0)):
            assert sum(x * y for x, y in zip(w, c.normal)) == 0


def test_type_II_members_are_affine_on_generated_cases():
    rng = random.Random(31)
    pool = [qfun_right_mul(b, random_quaternion(rng)) + QFunction.constant(random_quaternion(rng))
            for b in (IDENTITY, ANTI) for _ in range(5)]
    pool += [random_psi_regular(rng, 2) for _ in range(20)]
    for f in pool:
        if classify(f).type in (TYPE_I, TYPE_II):
            assert f.degree() <= 1


def test_reported_directions_span_top_eigenspace():
    for f in (H, IDENTITY, ANTI):
        em = matrix_A(f)
        c = classify(f, em=em)
        for w in c.directions:
            image = [sum(em.A[r][k] * w[k] for k in range(3)) for r in range(3)]
            assert image == [em.trace * x for x in w]
            assert check_holomorphic_p(f, w)


def test_classification_independent_of_domain():
    box = DomainSpec.box([(0, 1), (-1, 1), (F(1, 2), 2), (-1, 0)])
    for f in (H, IDENTITY, EXAMPLE_1, QUADRATIC, ANTI):
        em = matrix_A(f, box)
        assert em.energy == em.trace
        assert classify(f, box).type == classify(f).type
    assert classify(H, DomainSpec.ball(3)).directions == ((1, 0, 2),)


def test_char_poly_shifted():
    em = matrix_A(H)
    c3, c2, c1, c0 = em.char_poly_shifted
    assert c0 == em.shifted_det == 0
    assert (c3, c2) == (-1, sum(em.shifted()[k][k] for k in range(3)))


# ---- boundary-fixed perturbations -------------------------------------------

def test_perturbation_examples():
    assert perturb_fixed_boundary(IDENTITY, QFunction()) == IDENTITY
    u = perturb_fixed_boundary(IDENTITY, QFunction(CPoly.constant(1)))
    assert invariant_K(u) == invariant_K(IDENTITY)
    assert energy(u) >= energy(IDENTITY)


def test_perturbation_agrees_on_sphere():
    rng = random.Random(1)
    f, g = random_psi_regular(rng, 2), random_qfunction(rng, 1)
    u = perturb_fixed_boundary(f, g)
    x = np.array([0.3, -0.5, 0.1, 0.2])
    x /= np.linalg.norm(x)
    assert np.allclose(u.evaluate_real(x), f.evaluate_real(x))
