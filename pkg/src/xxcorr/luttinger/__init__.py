"""Luttinger-liquid side: lowest formfactors, prefactors and particle-hole factors."""

from ..excitations import OverlapError, ParticleHoleConfig
from .appendix import (
    NonConvergentIntegralError,
    appendix_integral_fminus,
    appendix_integral_fplus,
    appendix_integral_left_fminus,
    appendix_integral_left_fplus,
)
from .factors import (
    XX_POINT,
    LuttingerParams,
    branch_parameters,
    cauchy_determinant_factor,
    f_factors_left,
    f_minus_left,
    f_minus_right,
    f_plus_left,
    f_plus_right,
    ph_formfactor_prediction,
)
from .prefactors import (
    PredictionSeries,
    coefficient_y,
    coefficient_y_exact,
    luttinger_prediction_G,
    prediction_series,
    prefactor_C,
    psi_m_asymptotic,
)
from .resummation import (
    closed_form,
    convergence_table,
    enumerate_level,
    level_aggregate,
    sum_identity_partial,
    taylor_coefficient,
)
from .scaling import (
    ConvergenceReport,
    expected_shifted_sign,
    particle_hole_convergence,
    scaling_relation_check,
    shifted_ratio_sign,
)

__all__ = [
    "XX_POINT",
    "ConvergenceReport",
    "LuttingerParams",
    "NonConvergentIntegralError",
    "OverlapError",
    "ParticleHoleConfig",
    "PredictionSeries",
    "appendix_integral_fminus",
    "appendix_integral_fplus",
    "appendix_integral_left_fminus",
    "appendix_integral_left_fplus",
    "branch_parameters",
    "cauchy_determinant_factor",
    "closed_form",
    "coefficient_y",
    "coefficient_y_exact",
    "convergence_table",
    "enumerate_level",
    "expected_shifted_sign",
    "f_factors_left",
    "f_minus_left",
    "f_minus_right",
    "f_plus_left",
    "f_plus_right",
    "level_aggregate",
    "luttinger_prediction_G",
    "particle_hole_convergence",
    "ph_formfactor_prediction",
    "prediction_series",
    "prefactor_C",
    "psi_m_asymptotic",
    "scaling_relation_check",
    "shifted_ratio_sign",
    "sum_identity_partial",
    "taylor_coefficient",
]
