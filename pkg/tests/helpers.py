"""Random generators for polynomial functions used across the test suite."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from qregular.exactlinalg import nullspace
from qregular.gaussian import Gaussian
from qregular.hstructures import Quaternion
from qregular.qpolynomial import CPoly, QFunction, wirtinger


def monomials(max_degree: int):
    return [(a, b, c, d)
            for a in range(max_degree + 1) for b in range(max_degree + 1)
            for c in range(max_degree + 1) for d in range(max_degree + 1)
            if a + b + c + d <= max_degree]


def small_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2, 3)))


def small_gaussian(rng: random.Random) -> Gaussian:
    return Gaussian(small_rational(rng), small_rational(rng))


def random_cpoly(rng: random.Random, max_degree: int = 3, max_terms: int = 4) -> CPoly:
    mons = monomials(max_degree)
    chosen = rng.sample(mons, rng.randint(0, max_terms))
    return CPoly({m: small_gaussian(rng) for m in chosen})


def random_qfunction(rng: random.Random, max_degree: int = 3, max_terms: int = 4) -> QFunction:
    return QFunction(random_cpoly(rng, max_degree, max_terms), random_cpoly(rng, max_degree, max_terms))


def random_quaternion(rng: random.Random) -> Quaternion:
    return Quaternion(*(small_rational(rng) for _ in range(4)))


def _param_function(mons, k: int) -> QFunction:
    # parameter k -> (which component, monomial, real or imaginary unit)
    comp, rest = divmod(k, 2 * len(mons))
    m, part = divmod(rest, 2)
    poly = CPoly({mons[m]: Gaussian(1 - part, part)})
    return QFunction(poly, None) if comp == 0 else QFunction(None, poly)


def _residual_rows(f: QFunction, mons):
    f1b, f2b = f.f1.conj(), f.f2.conj()
    eqs = (wirtinger(f.f1, "z1bar") - wirtinger(f2b, "z2"),
           wirtinger(f.f1, "z2bar") + wirtinger(f2b, "z1"))
    out = []
    for eq in eqs:
        for m in mons:
            c = eq.coeff(m)
            out += [c.re, c.im]
    return out


@lru_cache(maxsize=None)
def psi_regular_basis(max_degree: int):
    """Rational basis (over R) of psi-regular polynomial maps of degree <= max_degree."""
    mons = monomials(max_degree)
    n = 4 * len(mons)
    columns = [_residual_rows(_param_function(mons, k), mons) for k in range(n)]
    rows = [list(r) for r in zip(*columns)]
    basis = []
    for v in nullspace(rows, n):
        f = QFunction()
        for k, coef in enumerate(v):
            if coef:
                g = _param_function(mons, k)
                f = f + QFunction(g.f1.scale(coef), g.f2.scale(coef))
        basis.append(f)
    return tuple(basis)


def random_psi_regular(rng: random.Random, max_degree: int = 3, terms: int = 3) -> QFunction:
    basis = psi_regular_basis(max_degree)
    f = QFunction()
    for g in rng.sample(basis, terms):
        c = small_rational(rng) or Fraction(1)
        f = f + QFunction(g.f1.scale(c), g.f2.scale(c))
    return f
