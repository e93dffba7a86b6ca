"""Sums of |F|^2 over particle-hole configurations.

    sum_configs |F_a|^2 e^{i (p - q) phi} = (1 - e^{i phi})^{-a^2}     (right)
    sum_configs |F_c|^2 e^{i (p - q) phi} = (1 - e^{-i phi})^{-c^2}    (left)

Configurations are enumerated level by level, the level being the total
momentum transfer k = |sum p_i - sum q_i|; at a fixed level the n-pair
configurations are listed in increasing n, then lexicographically by
particle set and hole set.  For rational parameters the level aggregates
are exact fractions and must equal the Taylor coefficients
(s)_k / k! of (1 - z)^{-s}, s = a^2.

On |z| = 1 those coefficients decay only like k^{a^2 - 1}, so the plain
partial sums converge slowly (or not at all when a^2 >= 1).  ``damping``
multiplies the level-k term by e^{-damping k}, the usual regulator.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union

from .factors import cauchy_determinant_factor

Number = Union[float, Fraction]


def _distinct_parts(total: int, count: int, minimum: int) -> Iterator[tuple[int, ...]]:
    """Increasing tuples of ``count`` integers >= minimum summing to ``total``."""
    if count == 0:
        if total == 0:
            yield ()
        return
    # smallest admissible sum of the remaining count parts starting at v
    v = minimum
    while v * count + count * (count - 1) // 2 <= total:
        for rest in _distinct_parts(total - v, count - 1, v + 1):
            yield (v,) + rest
        v += 1


def enumerate_level(level: int, branch: str = "right") -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (particles, holes) with total transfer ``level`` on one branch.

    Right branch: particles p > 0, holes q <= 0, level = sum p - sum q.
    Left branch: particles p < 0, holes q >= 0, level = sum q - sum p.
    """
    if level < 0:
        raise ValueError("level must be >= 0")
    if level == 0:
        yield (), ()
        return
    n = 1
    while n * n <= level:
        # particles use magnitudes >= 1, holes magnitudes >= 0
        for particle_sum in range(n * (n + 1) // 2, level + 1):
            hole_sum = level - particle_sum
            if hole_sum < n * (n - 1) // 2:
                continue
            for ps in _distinct_parts(particle_sum, n, 1):
                for hs in _distinct_parts(hole_sum, n, 0):
                    if branch == "right":
                        yield ps, tuple(-h for h in hs)
                    elif branch == "left":
                        yield tuple(-p for p in ps), hs
                    else:
                        raise ValueError(f"unknown branch {branch!r}")
        n += 1


def level_aggregate(level: int, param: Number, branch: str = "right") -> Number:
    """sum |F|^2 over all configurations of one level."""
    if isinstance(param, (Fraction, int)):
        return _level_aggregate_exact(level, Fraction(param), branch)
    total = 0.0
    for ps, qs in enumerate_level(level, branch):
        total += cauchy_determinant_factor(ps, qs, branch, param) ** 2
    return total


@lru_cache(maxsize=None)
def _level_aggregate_exact(level: int, param: Fraction, branch: str) -> Fraction:
    total = Fraction(0)
    for ps, qs in enumerate_level(level, branch):
        total += cauchy_determinant_factor(ps, qs, branch, param) ** 2
    return total


def taylor_coefficient(s: Number, k: int) -> Number:
    """Coefficient of z^k in (1 - z)^{-s}: (s)_k / k!."""
    out = Fraction(1) if isinstance(s, (Fraction, int)) else 1.0
    for i in range(k):
        out = out * (s + i) / (i + 1)
    return out


def closed_form(param: Number, phase: float, branch: str = "right") -> complex:
    """(1 - e^{+-i phi})^{-param^2} on the principal branch.

    1 - e^{i phi} = 2 sin(phi/2) e^{i (phi - pi)/2} with phase in (0, 2 pi),
    so its argument lies in (-pi/2, pi/2).
    """
    if not 0 < abs(phase) < 2 * math.pi:
        raise ValueError("phase must satisfy 0 < |phase| < 2 pi")
    phi = phase % (2 * math.pi)
    s = float(param) ** 2
    value = (2 * math.sin(phi / 2)) ** (-s) * cmath.exp(-1j * s * (phi - math.pi) / 2)
    return value if branch == "right" else value.conjugate()


def sum_identity_partial(
    param: Number, phase: float, cutoff: int, branch: str = "right", damping: float = 0.0
) -> complex:
    """Partial sum over all configurations with level <= cutoff."""
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    sign = 1 if branch == "right" else -1
    total = 0j
    for k in range(cutoff + 1):
        weight = float(level_aggregate(k, param, branch))
        total += weight * cmath.exp(sign * 1j * k * phase - damping * k)
    return total


def convergence_table(param: Number, phase: float, cutoff: int, branch: str = "right", damping: float = 0.0):
    """Rows (cutoff, partial sum, closed form, |error|) for cutoff = 0..cutoff."""
    sign = 1 if branch == "right" else -1
    target = closed_form(param, phase, branch)
    if damping:
        # closed form at z = e^{+-i phi - damping}
        z = cmath.exp(sign * 1j * phase - damping)
        target = (1 - z) ** (-(float(param) ** 2))
    rows = []
    total = 0j
    for k in range(cutoff + 1):
        total += float(level_aggregate(k, param, branch)) * cmath.exp(sign * 1j * k * phase - damping * k)
        rows.append((k, total, target, abs(total - target)))
    return rows
