"""Product formula for <{q}| sigma^-_0 |{p}> and its excited-state variants.

    psi = L^{-1/2} (i/L)^{M-1} e^{i sum q}
          prod_{i<j} sin((p_i - p_j)/2) prod_{i<j} sin((q_i - q_j)/2)
          / prod_{i,j} sin((p_i - q_j)/2)

The sine products are accumulated as log-magnitude plus sign so that
chains of several thousand sites neither underflow nor overflow.  The
"amplitude" helpers return the real number multiplying the state phase
``i^{M-1} e^{i sum q}``; ratios of amplitudes are gauge-free up to the
ordering convention of the fermions.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .. import kernels
from ..excitations import ParticleHoleConfig
from .states import ChainSpec, MomentumSet, ground_state_momenta


class SizeMismatchError(ValueError):
    """The q-set must hold exactly one momentum fewer than the p-set."""


class GridMismatchError(ValueError):
    """p and q must live on different (integer vs half-integer) grids."""


class ShiftTooLargeError(ValueError):
    """The shift m is not small compared with L."""


class OffsetRangeError(ValueError):
    """Particle-hole offsets are not small compared with L."""


def _check_pair(p: MomentumSet, q: MomentumSet) -> None:
    if p.L != q.L:
        raise SizeMismatchError(f"chains differ: L={p.L} vs L={q.L}")
    if len(q) != len(p) - 1:
        raise SizeMismatchError(f"need |q| = |p| - 1, got |p|={len(p)}, |q|={len(q)}")
    if len(q) and p.grid == q.grid:
        raise GridMismatchError("p and q sets share a grid; the sine denominators would vanish")


def log_amplitude(p: MomentumSet, q: MomentumSet, backend: str | None = None) -> tuple[float, int]:
    """ln|amplitude| and its sign, see module docstring."""
    _check_pair(p, q)
    L = p.L
    pj, qj = p.doubled, q.doubled
    lp, sp = kernels.sine_triangle_logsum(pj, L, backend)
    lq, sq = kernels.sine_triangle_logsum(qj, L, backend)
    lx, sx = kernels.sine_cross_logsum(pj, qj, L, backend)
    M = len(p)
    log_norm = -0.5 * math.log(L) - (M - 1) * math.log(L)
    return log_norm + lp + lq - lx, sp * sq * sx


def state_phase(p: MomentumSet, q: MomentumSet) -> complex:
    """i^{M-1} e^{i sum q}."""
    return (1j) ** ((len(p) - 1) % 4) * cmath.exp(1j * q.total_momentum)


def formfactor_amplitude(p: MomentumSet, q: MomentumSet, backend: str | None = None) -> float:
    logabs, sign = log_amplitude(p, q, backend)
    return sign * math.exp(logabs)


def formfactor(p: MomentumSet, q: MomentumSet, backend: str | None = None) -> complex:
    """<{q}| sigma^-_0 |{p}> from the product formula."""
    return state_phase(p, q) * formfactor_amplitude(p, q, backend)


# -- lowest formfactors psi_m -------------------------------------------------


def _check_shift(spec: ChainSpec, m: int) -> None:
    if m < 0:
        raise ValueError("m must be >= 0")
    if not 2 * m < spec.L / 4:
        raise ShiftTooLargeError(f"need 2m < L/4, got m={m}, L={spec.L}")


def shifted_ground_state(spec: ChainSpec, m: int) -> MomentumSet:
    """lambda(m): the (M-1)-particle ground state shifted right by m units.

    For a contiguous block this equals moving the m lowest occupied levels
    above the top one.
    """
    _check_shift(spec, m)
    q0 = ground_state_momenta(spec, "M-1")
    return MomentumSet.from_doubled(spec.L, q0.doubled + 2 * m)


def shifted_ground_formfactor(spec: ChainSpec, m: int, backend: str | None = None) -> complex:
    """psi_m = <lambda(m)| sigma^-_0 |t> at finite L."""
    return formfactor(ground_state_momenta(spec, "M"), shifted_ground_state(spec, m), backend)


def shifted_ground_amplitude(spec: ChainSpec, m: int, backend: str | None = None) -> float:
    return formfactor_amplitude(ground_state_momenta(spec, "M"), shifted_ground_state(spec, m), backend)


# -- particle-hole excitations ---------------------------------------------------


def _permutation_sign(seq) -> int:
    seq = list(seq)
    sign = 1
    seen = [False] * len(seq)
    order = {v: i for i, v in enumerate(sorted(seq))}
    for i in range(len(seq)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[seq[j]]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def particle_hole_state(spec: ChainSpec, config: ParticleHoleConfig) -> tuple[MomentumSet, int]:
    """q-set of lambda(m; p_i, q_i) and the ordering sign.

    Each hole is replaced in place by its paired particle, i.e. the state
    is c+_{p_n} c_{h_n} ... c+_{p_1} c_{h_1} |lambda(m)>.  The returned sign
    is the parity of the permutation that sorts the resulting sequence.
    """
    if config.max_offset + config.m >= spec.L / 8:
        raise OffsetRangeError(f"offsets up to {config.max_offset} with m={config.m} too large for L={spec.L}")
    base = list(shifted_ground_state(spec, config.m).doubled)
    if not base:
        raise OffsetRangeError("no occupied levels to excite")
    top, bottom = base[-1], base[0]
    occupied = set(base)
    seq = list(base)
    created = set()
    pairs = [(top + 2 * p, top + 2 * q) for p, q in config.right]
    pairs += [(bottom + 2 * p, bottom + 2 * q) for p, q in config.left]
    for particle, hole in pairs:
        if hole not in occupied:
            raise OffsetRangeError(f"hole level {hole} is not occupied")
        if particle in occupied or particle in created:
            raise OffsetRangeError(f"particle level {particle} is already occupied")
        seq[seq.index(hole)] = particle
        created.add(particle)
    return MomentumSet.from_doubled(spec.L, seq), _permutation_sign(seq)


def particle_hole_formfactor(spec: ChainSpec, config: ParticleHoleConfig, backend: str | None = None) -> complex:
    """<lambda(m; p_i, q_i)| sigma^-_0 |t> at finite L."""
    q, sign = particle_hole_state(spec, config)
    return sign * formfactor(ground_state_momenta(spec, "M"), q, backend)


def particle_hole_amplitude(spec: ChainSpec, config: ParticleHoleConfig, backend: str | None = None) -> float:
    q, sign = particle_hole_state(spec, config)
    return sign * formfactor_amplitude(ground_state_momenta(spec, "M"), q, backend)


def amplitude_array(p: MomentumSet, qs, backend: str | None = None) -> np.ndarray:
    return np.array([formfactor_amplitude(p, q, backend) for q in qs])
