"""Special functions, constants and exact rational series algebra."""

from .constants import CONSTANTS, Constants
from .series import (
    FormalSeries,
    VariableMismatchError,
    series_binomial_pow,
    series_exp,
    series_mul,
    series_substitute_shifted,
)
from .special import (
    DomainError,
    PoleError,
    barnes_g_half_integer,
    bernoulli,
    gamma_signed,
    ln_barnes_g_half_integer,
    ln_gamma,
)

__all__ = [
    "CONSTANTS",
    "Constants",
    "DomainError",
    "FormalSeries",
    "PoleError",
    "VariableMismatchError",
    "barnes_g_half_integer",
    "bernoulli",
    "gamma_signed",
    "ln_barnes_g_half_integer",
    "ln_gamma",
    "series_binomial_pow",
    "series_exp",
    "series_mul",
    "series_substitute_shifted",
]
