"""Lowest formfactors, correlator prefactors and the predicted expansion."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..numerics.constants import CONSTANTS
from ..numerics.special import ln_barnes_g_half_integer


def _ln_g_ratio(m: int) -> float:
    """ln[G(m + 1/2) / (sqrt(pi) G(1/2))]."""
    return ln_barnes_g_half_integer(m) - 0.5 * math.log(math.pi) - CONSTANTS.ln_barnes_g_half


def psi_m_asymptotic(psi_0: float, m: int, L: int) -> float:
    """psi_0 (pi/L)^{m^2} (G(m+1/2)/(sqrt(pi) G(1/2)))^2 Gamma(m+1/2) / pi^{m-1/2}."""
    if m < 0:
        raise ValueError("m must be >= 0")
    log = m * m * math.log(math.pi / L) + 2 * _ln_g_ratio(m) + math.lgamma(m + 0.5) - (m - 0.5) * math.log(math.pi)
    return psi_0 * math.exp(log)


def ln_abs_prefactor_C(m: int) -> float:
    """ln|C_m|; C_m itself leaves double range beyond m = 14."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return math.log(CONSTANTS.c0)
    return (
        -(2 * m * m - 0.5) * math.log(2.0)
        + (2 * m * m - 2 * m + 0.5) * math.log(math.pi)
        + 4 * ln_barnes_g_half_integer(m)
        + 2 * math.lgamma(m + 0.5)
    )


def prefactor_C(m: int) -> float:
    """C_m, the amplitude of cos(pi m x) / (L sin(pi x/L))^{1/2 + 2 m^2}.

    Raises OverflowError when |C_m| is not representable (m >= 15).
    """
    if m == 0:
        return CONSTANTS.c0
    return (-1) ** m * math.exp(ln_abs_prefactor_C(m))


def ln_abs_coefficient_y(m: int) -> float:
    if m < 1:
        raise ValueError("m must be >= 1")
    return -(2 * m * m - 1) * math.log(2.0) + 4 * _ln_g_ratio(m) + 2 * math.lgamma(m + 0.5) - (2 * m - 1) * math.log(math.pi)


def coefficient_y(m: int) -> float:
    """y_m from Barnes G and Gamma in floating point."""
    return (-1) ** m * math.exp(ln_abs_coefficient_y(m))


def _half_gamma_rational(k: int) -> Fraction:
    """Gamma(k + 1/2) / sqrt(pi) = (2k - 1)!! / 2^k."""
    out = Fraction(1)
    for i in range(1, k + 1):
        out *= Fraction(2 * i - 1, 2)
    return out


def coefficient_y_exact(m: int) -> Fraction:
    """y_m as an exact rational.

    G(m+1/2)/(sqrt(pi) G(1/2)) = prod_{k=1}^{m-1} Gamma(k+1/2), and every
    Gamma(k+1/2) is a rational multiple of sqrt(pi); all powers of pi cancel.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    g_ratio4 = Fraction(1)
    for k in range(1, m):
        g_ratio4 *= _half_gamma_rational(k) ** 4
    return (-1) ** m * Fraction(2) ** (1 - 2 * m * m) * g_ratio4 * _half_gamma_rational(m) ** 2


@dataclass(frozen=True)
class PredictionTerm:
    m: int
    prefactor: float
    exponent: Fraction  # power of 1/x: 1/2 + 2 m^2

    def oscillation(self, x: float, pF: float = math.pi / 2) -> float:
        return math.cos(2 * pF * self.m * x)


@dataclass(frozen=True)
class PredictionSeries:
    m_max: int
    terms: tuple[PredictionTerm, ...]


def prediction_series(m_max: int) -> PredictionSeries:
    terms = tuple(PredictionTerm(m, prefactor_C(m), Fraction(1, 2) + 2 * m * m) for m in range(m_max + 1))
    return PredictionSeries(m_max, terms)


def luttinger_prediction_G(x: float, m_max: int, c0: float | None = None) -> float:
    """(C_0/sqrt(pi)) [x^{-1/2} + sum_{m=1}^{m_max} y_m cos(pi m x) x^{-1/2-2m^2}]."""
    if x < 1:
        raise ValueError("x must be >= 1")
    c0 = CONSTANTS.c0 if c0 is None else c0
    integral = float(x).is_integer()
    total = x**-0.5
    for m in range(1, m_max + 1):
        osc = (-1.0) ** (m * int(x)) if integral else math.cos(math.pi * m * x)
        total += coefficient_y(m) * osc * x ** (-0.5 - 2 * m * m)
    return c0 / math.sqrt(math.pi) * total
