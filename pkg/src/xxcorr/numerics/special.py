"""Gamma, Barnes G at half-integers, and exact Bernoulli numbers."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .constants import CONSTANTS


class DomainError(ValueError):
    """Argument outside the domain of a special function."""


class PoleError(DomainError):
    """Argument sits on a pole of Gamma."""


def _is_nonpositive_integer(z: float) -> bool:
    return z <= 0 and float(z).is_integer()


def ln_gamma(z: float) -> float:
    """Natural log of Gamma for positive real ``z``."""
    if not z > 0:
        raise DomainError(f"ln_gamma requires z > 0, got {z!r}")
    return math.lgamma(z)


def gamma_signed(z: float) -> float:
    """Gamma(z) for real z off the poles, with the correct sign.

    Negative arguments go through the reflection formula
    Gamma(z) Gamma(1 - z) = pi / sin(pi z).
    """
    z = float(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at z = {z!r}")
    if z > 0:
        if z < 171.0:
            return math.gamma(z)
        return math.exp(math.lgamma(z))
    return math.pi / (math.sin(math.pi * z) * gamma_signed(1.0 - z))


def ln_abs_gamma_sign(z: float) -> tuple[float, int]:
    """Return ``(ln|Gamma(z)|, sign(Gamma(z)))`` for z off the poles."""
    z = float(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at z = {z!r}")
    if z > 0:
        return math.lgamma(z), 1
    # sign of Gamma on (-k-1, -k) is (-1)^(k+1)
    k = math.floor(-z)
    sign = -1 if k % 2 == 0 else 1
    return math.lgamma(z), sign


def ln_barnes_g_half_integer(m: int) -> float:
    """ln G(m + 1/2) by the recurrence G(1 + z) = Gamma(z) G(z)."""
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    terms = [CONSTANTS.ln_barnes_g_half]
    terms.extend(math.lgamma(k + 0.5) for k in range(m))
    return math.fsum(terms)


def barnes_g_half_integer(m: int) -> float:
    """G(m + 1/2) for integer m >= 0."""
    return math.exp(ln_barnes_g_half_integer(m))


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    # sum_{k=0}^{m} C(m+1, k) B_k = 0, B_0 = 1  (B_1 = -1/2 convention)
    table = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum(math.comb(m + 1, k) * table[k] for k in range(m))
        table.append(-acc / (m + 1))
    return tuple(table)


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n for even n >= 2."""
    if n < 2 or n % 2:
        raise DomainError(f"bernoulli is defined here for even n >= 2, got {n}")
    return _bernoulli_table(n)[n]
