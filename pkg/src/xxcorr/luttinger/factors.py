"""Particle-hole factors of the Luttinger-liquid formfactors.

Right branch (particles p > 0, holes q <= 0, parameter a):

    f+(p) = Gamma(p + a) / (Gamma(p) Gamma(a))
    f-(q) = Gamma(1 - q - a) / (Gamma(1 - q) Gamma(1 - a))

Left branch (particles p < 0, holes q >= 0, parameter c):

    f+(p) = Gamma(-p - c) / (Gamma(-p) Gamma(1 - c))
    f-(q) = Gamma(1 + q + c) / (Gamma(1 + q) Gamma(c))

and F = det[1/(p_i - q_j)] prod f+(p_i) prod f-(q_i).

Rational parameters (``Fraction`` or ``int``) give exact ``Fraction``
results through rising factorials; floats go through log-Gamma.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from ..excitations import ParticleHoleConfig
from ..numerics.special import PoleError, ln_abs_gamma_sign

Number = Union[float, Fraction]


@dataclass(frozen=True)
class LuttingerParams:
    xi: float = 1.0
    pF: float = math.pi / 2


XX_POINT = LuttingerParams()


def branch_parameters(m: int, params: LuttingerParams = XX_POINT) -> tuple[Number, Number]:
    """(a, c) = (-sqrt(xi)/2 + m/sqrt(xi), sqrt(xi)/2 + m/sqrt(xi)).

    At xi = 1 the values are returned as exact fractions m - 1/2, m + 1/2.
    """
    if params.xi == 1:
        return Fraction(2 * m - 1, 2), Fraction(2 * m + 1, 2)
    warnings.warn("xi != 1: untested prediction", stacklevel=2)
    r = math.sqrt(params.xi)
    return -r / 2 + m / r, r / 2 + m / r


def _exact(x) -> bool:
    return isinstance(x, (Fraction, int)) and not isinstance(x, bool)


def _is_pole(z) -> bool:
    return z <= 0 and (z == int(z))


def _rising(x: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for k in range(n):
        out *= x + k
    return out


def _gamma_ratio(num: float, den1: float, den2: float) -> float:
    """Gamma(num) / (Gamma(den1) Gamma(den2)) in log space."""
    ln, s = ln_abs_gamma_sign(num)
    l1, s1 = ln_abs_gamma_sign(den1)
    l2, s2 = ln_abs_gamma_sign(den2)
    return s * s1 * s2 * math.exp(ln - l1 - l2)


def f_plus_right(p: int, a: Number) -> Number:
    if p < 1:
        raise ValueError(f"right-branch particle offset must be >= 1, got {p}")
    if _is_pole(a):
        raise PoleError(f"Gamma(a) has a pole at a = {a}")
    if _exact(a):
        return _rising(Fraction(a), p) / math.factorial(p - 1)
    return _gamma_ratio(p + a, p, a)


def f_minus_right(q: int, a: Number) -> Number:
    if q > 0:
        raise ValueError(f"right-branch hole offset must be <= 0, got {q}")
    if _is_pole(1 - a):
        raise PoleError(f"Gamma(1 - a) has a pole at a = {a}")
    if _exact(a):
        return _rising(1 - Fraction(a), -q) / math.factorial(-q)
    return _gamma_ratio(1 - q - a, 1 - q, 1 - a)


def f_plus_left(p: int, c: Number) -> Number:
    if p > -1:
        raise ValueError(f"left-branch particle offset must be <= -1, got {p}")
    if _is_pole(1 - c):
        raise PoleError(f"Gamma(1 - c) has a pole at c = {c}")
    if _exact(c):
        return _rising(1 - Fraction(c), -p - 1) / math.factorial(-p - 1)
    return _gamma_ratio(-p - c, -p, 1 - c)


def f_minus_left(q: int, c: Number) -> Number:
    if q < 0:
        raise ValueError(f"left-branch hole offset must be >= 0, got {q}")
    if _is_pole(c):
        raise PoleError(f"Gamma(c) has a pole at c = {c}")
    if _exact(c):
        return _rising(Fraction(c), q + 1) / math.factorial(q)
    return _gamma_ratio(1 + q + c, 1 + q, c)


def f_factors_left(p: int, q: int, c: Number) -> tuple[Number, Number]:
    return f_plus_left(p, c), f_minus_left(q, c)


def _det_exact(rows: list[list[Fraction]]) -> Fraction:
    a = [row[:] for row in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for k in range(col, n):
                    a[r][k] -= f * a[col][k]
    return det


def cauchy_matrix_det(particles: Sequence[int], holes: Sequence[int], exact: bool = True):
    """det[1 / (p_i - q_j)]."""
    if exact:
        return _det_exact([[Fraction(1, p - q) for q in holes] for p in particles])
    if not len(particles):
        return 1.0
    return float(np.linalg.det(1.0 / np.subtract.outer(np.asarray(particles, float), np.asarray(holes, float))))


def cauchy_determinant_factor(
    particles: Sequence[int], holes: Sequence[int], branch: str, exponent_param: Number
) -> Number:
    """F_a (branch='right') or F_c (branch='left') for n particles and n holes."""
    if len(particles) != len(holes):
        raise ValueError("need as many particles as holes")
    if branch == "right":
        fp, fm = f_plus_right, f_minus_right
    elif branch == "left":
        fp, fm = f_plus_left, f_minus_left
    else:
        raise ValueError(f"branch must be 'right' or 'left', got {branch!r}")
    exact = _exact(exponent_param)
    value = cauchy_matrix_det(particles, holes, exact=exact)
    for p in particles:
        value *= fp(p, exponent_param)
    for q in holes:
        value *= fm(q, exponent_param)
    return value


def ph_formfactor_prediction(psi_m: Number, config: ParticleHoleConfig, params: LuttingerParams = XX_POINT) -> Number:
    """psi_m F_a(right) F_c(left) with a = m - 1/2, c = m + 1/2 at xi = 1."""
    a, c = branch_parameters(config.m, params)
    Fa = cauchy_determinant_factor(config.right_particles, config.right_holes, "right", a)
    Fc = cauchy_determinant_factor(config.left_particles, config.left_holes, "left", c)
    return psi_m * Fa * Fc
