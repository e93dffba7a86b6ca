"""Fourier-integral representations of the particle-hole factors.

    right f+(p) = a int_0^{2pi} dy/2pi e^{-i(p-1)y} (1 - e^{iy})^{-(a+1)},   p > 0
    right f-(q) =   int_0^{2pi} dx/2pi e^{iqx}     (1 - e^{ix})^{a-1},      q <= 0
    left  f+(p) =   int_0^{2pi} dy/2pi e^{-i(p+1)y} (1 - e^{-iy})^{c-1},    p < 0
    left  f-(q) = c int_0^{2pi} dx/2pi e^{iqx}     (1 - e^{-ix})^{-(c+1)}, q >= 0

Each is the coefficient of w^n, w = e^{i sigma y}, of (1 - w)^s.  With
1 - e^{i sigma y} = 2 sin(y/2) e^{i sigma (y - pi)/2} the integrand carries
the endpoint factor [y (2 pi - y)]^s times an analytic function, which
Gauss-Jacobi quadrature with weight (1 - t)^s (1 + t)^s integrates to
machine precision.

For s <= -1 the integral diverges at the endpoints.  Its Abel value is
then obtained from (1 - w)^s = (1 - w)^{s+1} / (1 - w), i.e. the n-th
coefficient at exponent s is the sum of the coefficients 0..n at
exponent s + 1, each of which is again a convergent integral.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import roots_jacobi


class NonConvergentIntegralError(ValueError):
    """The requested Fourier integral has a non-integrable endpoint singularity."""


def fourier_power_coefficient(n: int, s: float, sigma: int = 1, nodes: int = 64) -> complex:
    """int_0^{2pi} dy/2pi e^{-i sigma n y} (1 - e^{i sigma y})^s for s > -1."""
    if not s > -1:
        raise NonConvergentIntegralError(f"exponent {s} <= -1 is not integrable")
    if sigma not in (1, -1):
        raise ValueError("sigma must be +1 or -1")
    t, w = roots_jacobi(nodes, s, s)
    y = math.pi * (1.0 + t)
    # 2 sin(y/2) = y (2 pi - y) r(y); y (2 pi - y) = pi^2 (1 - t)(1 + t)
    r = 2.0 * np.sin(y / 2) / (y * (2 * math.pi - y))
    phase = np.exp(-1j * sigma * n * y + 1j * sigma * s * (y - math.pi) / 2)
    # dy / 2pi = dt / 2
    return complex(0.5 * math.pi ** (2 * s) * np.sum(w * r**s * phase))


def regularized_power_coefficient(n: int, s: float, sigma: int = 1, nodes: int = 64) -> complex:
    """Abel value of the same integral, valid for any real s."""
    if n < 0:
        return 0j
    if s > -1:
        return fourier_power_coefficient(n, s, sigma, nodes)
    return sum(regularized_power_coefficient(j, s + 1, sigma, nodes) for j in range(n + 1))


def appendix_integral_fplus(p: int, a: float, quadrature_nodes: int = 64) -> float:
    """Right-branch f+(p) by quadrature; needs a < 0 for convergence."""
    if p < 1:
        raise ValueError("p must be >= 1")
    if a >= 0:
        raise NonConvergentIntegralError("the f+ integral diverges for a >= 0")
    return float((a * fourier_power_coefficient(p - 1, -(a + 1), 1, quadrature_nodes)).real)


def appendix_integral_fminus(q: int, a: float, quadrature_nodes: int = 64) -> float:
    """Right-branch f-(q) by (regularized) quadrature."""
    if q > 0:
        raise ValueError("q must be <= 0")
    return float(regularized_power_coefficient(-q, a - 1, 1, quadrature_nodes).real)


def appendix_integral_left_fplus(p: int, c: float, quadrature_nodes: int = 64) -> float:
    """Left-branch f+(p) by (regularized) quadrature."""
    if p > -1:
        raise ValueError("p must be <= -1")
    return float(regularized_power_coefficient(-p - 1, c - 1, -1, quadrature_nodes).real)


def appendix_integral_left_fminus(q: int, c: float, quadrature_nodes: int = 64) -> float:
    """Left-branch f-(q) by (regularized) quadrature."""
    if q < 0:
        raise ValueError("q must be >= 0")
    return float((c * regularized_power_coefficient(q, -(c + 1), -1, quadrature_nodes)).real)


def imaginary_residual(n: int, s: float, sigma: int = 1, nodes: int = 64) -> float:
    """|Im| of the quadrature; the exact coefficient is real."""
    return abs(regularized_power_coefficient(n, s, sigma, nodes).imag)


__all__ = [
    "NonConvergentIntegralError",
    "appendix_integral_fminus",
    "appendix_integral_fplus",
    "appendix_integral_left_fminus",
    "appendix_integral_left_fplus",
    "fourier_power_coefficient",
    "imaginary_residual",
    "regularized_power_coefficient",
]
