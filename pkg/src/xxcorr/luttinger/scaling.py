"""Finite-L checks of the Luttinger predictions against the product formula.

Both reports evaluate a deviation at a ladder of chain lengths and fit the
log-log slope of |deviation| against L.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..excitations import ParticleHoleConfig
from ..xxchain.formfactor import particle_hole_amplitude, shifted_ground_amplitude
from ..xxchain.states import ChainSpec
from .factors import XX_POINT, LuttingerParams, ph_formfactor_prediction
from .prefactors import prefactor_C

DEFAULT_LS = (64, 128, 256, 512)


def loglog_slope(xs, ys) -> float:
    """Least-squares slope of ln|y| against ln x."""
    return float(np.polyfit(np.log(np.asarray(xs, float)), np.log(np.abs(np.asarray(ys, float))), 1)[0])


@dataclass(frozen=True)
class ConvergenceReport:
    label: str
    target: float
    Ls: tuple[int, ...]
    values: tuple[float, ...]
    deviations: tuple[float, ...]  # value / target - 1

    @property
    def slope(self) -> float:
        return loglog_slope(self.Ls, self.deviations)

    @property
    def monotone(self) -> bool:
        d = np.abs(self.deviations)
        return bool(np.all(np.diff(d) < 0))

    def rows(self):
        return [(L, v, self.target, d) for L, v, d in zip(self.Ls, self.values, self.deviations)]


def scaling_relation_check(m: int, Ls=DEFAULT_LS, params: LuttingerParams = XX_POINT) -> ConvergenceReport:
    """|psi_m|^2 (L/2)^{xi/2 + 2m^2/xi} against (-1)^m C_m / (2 - delta_{m0})."""
    if params.xi != 1:
        raise NotImplementedError("the finite chain is the XX point, xi = 1")
    exponent = params.xi / 2 + 2 * m * m / params.xi
    target = (-1) ** m * prefactor_C(m) / (1 if m == 0 else 2)
    values = []
    for L in Ls:
        amp = shifted_ground_amplitude(ChainSpec.half_filled(L), m)
        values.append(amp * amp * (L / 2) ** exponent)
    deviations = tuple(v / target - 1 for v in values)
    return ConvergenceReport(f"scaling m={m}", target, tuple(Ls), tuple(values), deviations)


def particle_hole_convergence(config: ParticleHoleConfig, Ls=DEFAULT_LS) -> ConvergenceReport:
    """Finite-L ratio psi_m(p_i, q_i) / psi_m against F_a F_c."""
    target = float(ph_formfactor_prediction(1, config))
    values = []
    for L in Ls:
        spec = ChainSpec.half_filled(L)
        values.append(particle_hole_amplitude(spec, config) / shifted_ground_amplitude(spec, config.m))
    deviations = tuple(v / target - 1 for v in values)
    label = f"ph m={config.m} right={list(config.right)} left={list(config.left)}"
    return ConvergenceReport(label, target, tuple(Ls), tuple(values), deviations)


def shifted_ratio_sign(spec: ChainSpec, m: int) -> int:
    """Sign of psi_m / psi_0 after stripping the state phases."""
    r = shifted_ground_amplitude(spec, m) / shifted_ground_amplitude(spec, 0)
    return int(math.copysign(1, r))


def expected_shifted_sign(M: int, m: int) -> int:
    """(-1)^{m(M+1) + m(m-1)/2}: the phase i^{M-1} e^{i sum q} is stripped
    from both amplitudes, and moving m fermions across the sea reorders them."""
    return (-1) ** ((m * (M + 1) + m * (m - 1) // 2) % 2)
