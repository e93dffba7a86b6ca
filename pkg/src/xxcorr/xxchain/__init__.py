"""Finite XX chain: eigenstates, exact formfactors and brute-force oracles."""

from .correlator import finite_correlator, fermion_correlation
from .ed import (
    DegenerateMatchError,
    OracleComparison,
    SectorEigenbasis,
    compare_with_formula,
    ed_formfactor_table,
    ed_oracle_formfactor,
    golden_rows,
    sector_eigenbasis,
)
from .formfactor import (
    GridMismatchError,
    OffsetRangeError,
    ShiftTooLargeError,
    SizeMismatchError,
    formfactor,
    formfactor_amplitude,
    particle_hole_amplitude,
    particle_hole_formfactor,
    particle_hole_state,
    shifted_ground_amplitude,
    shifted_ground_formfactor,
    shifted_ground_state,
)
from .states import ChainSpec, Grid, MomentumSet, ground_state_momenta, sector_states

__all__ = [
    "ChainSpec",
    "DegenerateMatchError",
    "OracleComparison",
    "Grid",
    "GridMismatchError",
    "MomentumSet",
    "OffsetRangeError",
    "SectorEigenbasis",
    "ShiftTooLargeError",
    "SizeMismatchError",
    "compare_with_formula",
    "ed_formfactor_table",
    "ed_oracle_formfactor",
    "fermion_correlation",
    "finite_correlator",
    "formfactor",
    "formfactor_amplitude",
    "golden_rows",
    "ground_state_momenta",
    "particle_hole_amplitude",
    "particle_hole_formfactor",
    "particle_hole_state",
    "sector_eigenbasis",
    "sector_states",
    "shifted_ground_amplitude",
    "shifted_ground_formfactor",
    "shifted_ground_state",
]
