"""Exact volume-normalized integrals of CPoly over balls and boxes in C^2.

Every value returned here is (1/vol(Omega)) * integral over Omega.  On the
unit ball

    avg(z1^a z1bar^b z2^c z2bar^d) = 2 a! c! / (a + c + 2)!   if a == b and c == d

and zero otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

import numpy as np

from .gaussian import Gaussian
from .qpolynomial import CPoly, Exponent


@dataclass(frozen=True)
class DomainSpec:
    kind: str = "unit_ball"
    radius: Fraction = Fraction(1)
    intervals: tuple = ()

    def __post_init__(self):
        if self.kind not in ("unit_ball", "ball", "box"):
            raise ValueError(f"unknown domain kind {self.kind!r}")
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.kind == "ball" and self.radius <= 0:
            raise ValueError("ball radius must be positive")
        if self.kind == "box":
            ivs = tuple((Fraction(a), Fraction(b)) for a, b in self.intervals)
            if len(ivs) != 4 or any(b <= a for a, b in ivs):
                raise ValueError("box needs four nonempty intervals")
            object.__setattr__(self, "intervals", ivs)

    @classmethod
    def unit_ball(cls) -> "DomainSpec":
        return cls("unit_ball")

    @classmethod
    def ball(cls, radius) -> "DomainSpec":
        return cls("ball", radius=Fraction(radius))

    @classmethod
    def box(cls, intervals) -> "DomainSpec":
        return cls("box", intervals=tuple(intervals))

    def describe(self) -> str:
        if self.kind == "unit_ball":
            return "unit-ball"
        if self.kind == "ball":
            return f"ball:{self.radius}"
        return "box:" + "x".join(f"{a},{b}" for a, b in self.intervals)


UNIT_BALL = DomainSpec.unit_ball()


def _ball_average(e: Exponent) -> Fraction:
    a, b, c, d = e
    if a != b or c != d:
        return Fraction(0)
    return Fraction(2 * factorial(a) * factorial(c), factorial(a + c + 2))


def _interval_average(n: int, lo: Fraction, hi: Fraction) -> Fraction:
    return (hi ** (n + 1) - lo ** (n + 1)) / ((n + 1) * (hi - lo))


def _pair_expansion(p: int, q: int) -> dict[tuple[int, int], Gaussian]:
    """(x + iy)^p (x - iy)^q as a polynomial in real x, y."""
    out: dict[tuple[int, int], Gaussian] = {}
    for r in range(p + 1):
        for s in range(q + 1):
            k = r + s  # power of y
            coef = Gaussian(0, 1) ** r * Gaussian(0, -1) ** s * (comb(p, r) * comb(q, s))
            key = (p + q - k, k)
            out[key] = out.get(key, Gaussian(0)) + coef
    return out


def _box_average(e: Exponent, intervals) -> Gaussian:
    a, b, c, d = e
    (l0, h0), (l1, h1), (l2, h2), (l3, h3) = intervals
    first = Gaussian(0)
    for (n0, n1), coef in _pair_expansion(a, b).items():
        first += coef * (_interval_average(n0, l0, h0) * _interval_average(n1, l1, h1))
    if first.is_zero():
        return first
    second = Gaussian(0)
    for (n2, n3), coef in _pair_expansion(c, d).items():
        second += coef * (_interval_average(n2, l2, h2) * _interval_average(n3, l3, h3))
    return first * second


def integrate_monomial(exponents: Exponent, domain: DomainSpec = UNIT_BALL):
    """Normalized integral of z1^a z1bar^b z2^c z2bar^d over the domain."""
    e = tuple(exponents)
    if domain.kind == "unit_ball":
        return _ball_average(e)
    if domain.kind == "ball":
        return _ball_average(e) * domain.radius ** sum(e)
    return _box_average(e, domain.intervals)


def integrate_poly(p: CPoly, domain: DomainSpec = UNIT_BALL) -> Gaussian:
    """Normalized integral of a polynomial; linear in p."""
    total = Gaussian(0)
    for e, c in p.items():
        v = integrate_monomial(e, domain)
        if v:
            total = total + c * v
    return total


def integrate_real(p: CPoly, domain: DomainSpec = UNIT_BALL) -> Fraction:
    """Normalized integral of a real-valued polynomial."""
    v = integrate_poly(p, domain)
    if v.im != 0:
        raise ValueError("integrand is not real-valued")
    return v.re


def sample_domain(domain: DomainSpec, samples: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform points (samples x 4) in real coordinates."""
    if domain.kind == "box":
        lo = np.array([float(a) for a, _ in domain.intervals])
        hi = np.array([float(b) for _, b in domain.intervals])
        return lo + (hi - lo) * rng.random((samples, 4))
    radius = float(domain.radius)
    chunks, have = [], 0
    while have < samples:
        need = samples - have
        # acceptance ratio of the 4-ball in its cube is pi^2/32 ~ 0.308
        batch = rng.uniform(-1.0, 1.0, size=(int(need / 0.3) + 64, 4))
        batch = batch[np.einsum("ij,ij->i", batch, batch) <= 1.0]
        chunks.append(batch[:need])
        have += len(chunks[-1])
    return radius * np.concatenate(chunks)


def monte_carlo_integral(p: CPoly, domain: DomainSpec = UNIT_BALL,
                         samples: int = 100_000, seed: int = 0):
    """Monte Carlo estimate of the normalized integral.

    Returns ``(estimate, standard_error)`` as complex numbers (the standard
    error carries the real and imaginary parts separately).
    """
    if samples <= 0:
        raise ValueError("samples must be positive")
    rng = np.random.default_rng(seed)
    pts = sample_domain(domain, samples, rng)
    z1 = pts[:, 0] + 1j * pts[:, 1]
    z2 = pts[:, 2] + 1j * pts[:, 3]
    values = np.broadcast_to(np.asarray(p.evaluate(z1, z2), dtype=complex), (samples,))
    mean = values.mean()
    if samples == 1:
        return complex(mean), 0j
    se = complex(values.real.std(ddof=1), values.imag.std(ddof=1)) / np.sqrt(samples)
    return complex(mean), se
