"""Chain parameters and momentum-set labels of XX chain eigenstates.

An eigenstate with N up-spins is a free-fermion Slater determinant.  The
Jordan-Wigner string makes the fermions periodic when N is odd and
antiperiodic when N is even, so the momenta k = 2 pi (n + offset) / L sit
on the integer grid (offset 0) or the half-integer grid (offset 1/2).
Internally momenta are handled as doubled indices ``j = 2 n + 2 offset``,
i.e. ``k = pi j / L``, which keeps every difference an exact integer.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np


class Grid(enum.Enum):
    INTEGER = 0
    HALF_INTEGER = 1

    @property
    def offset(self) -> float:
        return 0.5 * self.value

    @classmethod
    def for_particle_number(cls, n: int) -> "Grid":
        return cls.INTEGER if n % 2 else cls.HALF_INTEGER


@dataclass(frozen=True)
class ChainSpec:
    L: int
    M: int

    def __post_init__(self):
        if self.L <= 0 or self.L % 2:
            raise ValueError(f"L must be a positive even integer, got {self.L}")
        if not 0 <= self.M <= self.L:
            raise ValueError(f"M must lie in [0, L], got {self.M}")

    @classmethod
    def half_filled(cls, L: int) -> "ChainSpec":
        return cls(L, L // 2)


@dataclass(frozen=True)
class MomentumSet:
    """Occupied momenta k_i = 2 pi (n_i + offset) / L of one eigenstate.

    ``indices`` are kept sorted.  They are not reduced modulo L: the
    zero-centred representatives used for ground states are stored as is,
    and :meth:`canonical` gives the representatives in [0, 2 pi).
    """

    L: int
    grid: Grid
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(int(n) for n in self.indices)
        if list(idx) != sorted(idx):
            raise ValueError("indices must be sorted")
        if len({n % self.L for n in idx}) != len(idx):
            raise ValueError("indices must be distinct modulo L")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def from_doubled(cls, L: int, doubled) -> "MomentumSet":
        doubled = sorted(int(j) for j in doubled)
        parities = {j % 2 for j in doubled}
        if len(parities) > 1:
            raise ValueError("mixed grids in one momentum set")
        grid = Grid(parities.pop()) if parities else Grid.INTEGER
        return cls(L, grid, tuple((j - grid.value) // 2 for j in doubled))

    def __len__(self) -> int:
        return len(self.indices)

    @property
    def doubled(self) -> np.ndarray:
        return np.array([2 * n + self.grid.value for n in self.indices], dtype=np.int64)

    @property
    def momenta(self) -> np.ndarray:
        return np.pi * self.doubled / self.L

    @property
    def total_momentum(self) -> float:
        return float(np.pi * self.doubled.sum() / self.L)

    def canonical(self) -> "MomentumSet":
        return MomentumSet(self.L, self.grid, tuple(sorted(n % self.L for n in self.indices)))

    def label(self) -> str:
        """Compact id: doubled indices joined by ':' (empty set -> '-')."""
        return ":".join(str(j) for j in self.doubled) or "-"

    def energy(self) -> float:
        """Eigenvalue of sum_i (sx sx + sy sy), equal to 4 sum_k cos k."""
        return float(4.0 * np.cos(self.momenta).sum())


def ground_state_momenta(spec: ChainSpec, sector: str = "M") -> MomentumSet:
    """Zero-centred filling of ``N`` fermions, N = M or M - 1.

    k_i = (2 pi / L)(i - (N + 1)/2), i = 1..N.  For N odd this is the
    integer grid, for N even the half-integer grid, as the boundary
    condition requires.  (This filling is the ground state of -H; the sign
    of H only relabels which state is lowest.)
    """
    if sector == "M":
        n = spec.M
    elif sector in ("M-1", "M−1"):
        n = spec.M - 1
    else:
        raise ValueError(f"sector must be 'M' or 'M-1', got {sector!r}")
    if n < 0:
        raise ValueError("sector M-1 needs M >= 1")
    return MomentumSet.from_doubled(spec.L, [2 * i - (n + 1) for i in range(1, n + 1)])


def sector_states(L: int, n: int) -> list[MomentumSet]:
    """All C(L, n) momentum sets of the n-particle sector, k in (-pi, pi]."""
    parity = Grid.for_particle_number(n).value
    window = [j for j in range(-L + 1, L + 1) if j % 2 == parity]
    assert len(window) == L
    return [MomentumSet.from_doubled(L, combo) for combo in itertools.combinations(window, n)]


def sector_dimension(L: int, n: int) -> int:
    return math.comb(L, n)
