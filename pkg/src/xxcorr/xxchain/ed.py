"""Exact-diagonalization oracle for small chains (L <= 8).

The spin Hamiltonian H = sum_x (sx_x sx_{x+1} + sy_x sy_{x+1}) is built
directly in the 2^L spin basis and diagonalized sector by sector.  Energy
and total momentum do not separate all eigenstates (at L = 8 whole
multiplets share both), so each energy eigenspace is further diagonalized
with a generic combination of the conserved hopping charges

    Q_j = sum_x c+_x c_{x+j},   c_{x+L} = (-1)^{N-1} c_x,

written out in the spin basis through the Jordan-Wigner string.  Q_j acts
on a Slater determinant {k} as sum_k e^{i k j}, so the charge eigenvalue
identifies the momentum set.  Matching is checked, never assumed.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from .states import ChainSpec, MomentumSet, ground_state_momenta, sector_states

MAX_ED_SITES = 8
_SEED = 20240611
_DEGENERACY_TOL = 1e-9
_MATCH_TOL = 1e-8


class DegenerateMatchError(RuntimeError):
    """Eigenvectors could not be matched one-to-one with momentum sets."""


@dataclass(frozen=True)
class SectorEigenbasis:
    L: int
    N: int
    basis: np.ndarray  # spin configurations (bit x set = up spin at site x)
    states: tuple[MomentumSet, ...]
    vectors: np.ndarray  # column i is the eigenvector of states[i]
    energies: np.ndarray

    def index(self, state: MomentumSet) -> int:
        key = tuple(sorted(int(j) % (2 * self.L) for j in state.doubled))
        for i, s in enumerate(self.states):
            if tuple(sorted(int(j) % (2 * self.L) for j in s.doubled)) == key:
                return i
        raise KeyError(f"momentum set {state.label()} not in sector N={self.N}")


def _sector_basis(L: int, n: int) -> np.ndarray:
    return np.array([s for s in range(1 << L) if bin(s).count("1") == n], dtype=np.int64)


def spin_hamiltonian(L: int, basis: np.ndarray) -> np.ndarray:
    """H = sum_x 2 (s+_x s-_{x+1} + s-_x s+_{x+1}) on a fixed-N basis."""
    pos = {int(s): i for i, s in enumerate(basis)}
    H = np.zeros((len(basis), len(basis)))
    for col, s in enumerate(basis):
        s = int(s)
        for x in range(L):
            y = (x + 1) % L
            if ((s >> x) & 1) != ((s >> y) & 1):
                t = s ^ ((1 << x) | (1 << y))
                H[pos[t], col] += 2.0
    return H


def hopping_charge(L: int, n: int, basis: np.ndarray, j: int) -> np.ndarray:
    """Q_j = sum_x c+_x c_{x+j} in the spin basis of the n-particle sector."""
    twist = -1 if (n - 1) % 2 else 1
    pos = {int(s): i for i, s in enumerate(basis)}
    Q = np.zeros((len(basis), len(basis)))
    for col, s in enumerate(basis):
        s = int(s)
        for x in range(L):
            y_raw = x + j
            y = y_raw % L
            factor = twist ** (y_raw // L)
            if x == y:
                if (s >> x) & 1:
                    Q[col, col] += factor
                continue
            if not (s >> y) & 1 or (s >> x) & 1:
                continue
            lo, hi = min(x, y), max(x, y)
            between = bin(s & (((1 << hi) - 1) ^ ((1 << (lo + 1)) - 1))).count("1")
            t = s ^ ((1 << x) | (1 << y))
            Q[pos[t], col] += factor * (-1) ** between
    return Q


def _charge_weights(L: int) -> tuple[np.ndarray, np.ndarray]:
    rng = np.random.default_rng(_SEED + L)
    return rng.normal(size=L), rng.normal(size=L)


def _charge_value(state: MomentumSet, w: np.ndarray, v: np.ndarray) -> float:
    k = state.momenta
    j = np.arange(1, len(w) + 1)
    g = np.cos(np.outer(k, j)) @ w + np.sin(np.outer(k, j)) @ v
    return float(g.sum())


@lru_cache(maxsize=None)
def sector_eigenbasis(L: int, n: int) -> SectorEigenbasis:
    """Eigenvectors of the n-particle sector labelled by momentum sets."""
    if L > MAX_ED_SITES:
        raise ValueError(f"ED oracle limited to L <= {MAX_ED_SITES}, got {L}")
    basis = _sector_basis(L, n)
    H = spin_hamiltonian(L, basis)
    candidates = sector_states(L, n)
    if n == 0:
        return SectorEigenbasis(L, n, basis, tuple(candidates), np.ones((1, 1), dtype=complex), np.zeros(1))

    w, v = _charge_weights(L)
    Q = [hopping_charge(L, n, basis, j) for j in range(1, L + 1)]
    Q1 = Q[0]
    if not np.allclose(H, 2.0 * (Q1 + Q1.T), atol=1e-12):
        raise RuntimeError("Jordan-Wigner hopping does not reproduce the spin Hamiltonian")
    K = sum(wj * (Qj + Qj.T) / 2 + vj * (Qj - Qj.T) / 2j for wj, vj, Qj in zip(w, v, Q))
    if np.abs(H @ K - K @ H).max() > 1e-10:
        raise RuntimeError("charge does not commute with H")

    energies, U = np.linalg.eigh(H)
    vectors = np.zeros(U.shape, dtype=complex)
    labels = np.zeros(len(energies))
    start = 0
    while start < len(energies):
        stop = start + 1
        while stop < len(energies) and energies[stop] - energies[start] < _DEGENERACY_TOL:
            stop += 1
        block = U[:, start:stop]
        kvals, kvecs = np.linalg.eigh(block.conj().T @ K @ block)
        vectors[:, start:stop] = block @ kvecs
        labels[start:stop] = kvals
        start = stop

    expected = np.array([_charge_value(s, w, v) for s in candidates])
    cand_energy = np.array([s.energy() for s in candidates])
    order = []
    used = set()
    for i in range(len(labels)):
        hits = np.flatnonzero((np.abs(expected - labels[i]) < _MATCH_TOL) & (np.abs(cand_energy - energies[i]) < 1e-8))
        if len(hits) != 1 or int(hits[0]) in used:
            raise DegenerateMatchError(
                f"L={L}, N={n}: eigenvector {i} (E={energies[i]:.6f}) matched {len(hits)} momentum sets"
            )
        used.add(int(hits[0]))
        order.append(int(hits[0]))
    states = tuple(candidates[i] for i in order)
    return SectorEigenbasis(L, n, basis, states, vectors, energies)


def lowering_operator(L: int, upper: np.ndarray, lower: np.ndarray) -> np.ndarray:
    """Matrix of sigma^-_0 from the N-sector basis to the (N-1)-sector basis."""
    pos = {int(s): i for i, s in enumerate(lower)}
    S = np.zeros((len(lower), len(upper)))
    for col, s in enumerate(upper):
        s = int(s)
        if s & 1:
            S[pos[s ^ 1], col] = 1.0
    return S


@lru_cache(maxsize=None)
def ed_formfactor_table(L: int, M: int) -> tuple[SectorEigenbasis, SectorEigenbasis, np.ndarray]:
    """All matrix elements <q| sigma^-_0 |p>; rows index q, columns index p."""
    if M < 1:
        raise ValueError("need M >= 1")
    upper = sector_eigenbasis(L, M)
    lower = sector_eigenbasis(L, M - 1)
    S = lowering_operator(L, upper.basis, lower.basis)
    return upper, lower, lower.vectors.conj().T @ S @ upper.vectors


def ed_oracle_formfactor(spec: ChainSpec, p_state: MomentumSet, q_state: MomentumSet) -> complex:
    """Matrix element from explicit eigenvectors (phase is arbitrary)."""
    upper, lower, table = ed_formfactor_table(spec.L, spec.M)
    return complex(table[lower.index(q_state), upper.index(p_state)])


def golden_rows(L_values=(2, 4, 6, 8)) -> list[tuple[int, int, str, str, float]]:
    """(L, M, p-state id, q-state id, |psi|^2) with p the zero-centred filling."""
    rows = []
    for L in L_values:
        for M in range(1, L + 1):
            spec = ChainSpec(L, M)
            p = ground_state_momenta(spec, "M")
            upper, lower, table = ed_formfactor_table(L, M)
            col = upper.index(p)
            for row, q in enumerate(lower.states):
                rows.append((L, M, p.label(), q.label(), float(abs(table[row, col]) ** 2)))
    return rows


GOLDEN_HEADER = ("L", "M", "p_state", "q_state", "abs2")


def write_golden(path: str | Path, L_values=(2, 4, 6, 8)) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(GOLDEN_HEADER)
        for L, M, p, q, abs2 in golden_rows(L_values):
            writer.writerow((L, M, p, q, format(abs2, ".17g")))


def read_golden(path: str | Path) -> list[tuple[int, int, str, str, float]]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        return [(int(r["L"]), int(r["M"]), r["p_state"], r["q_state"], float(r["abs2"])) for r in reader]


@dataclass(frozen=True)
class OracleComparison:
    L: int
    pairs: int
    max_abs_diff: float  # max | |psi_formula| - |psi_ED| |
    max_completeness_error: float  # max_p | sum_q |psi|^2 - M/L |


def compare_with_formula(L: int) -> OracleComparison:
    """Every (p, q) pair of every sector of an L-site chain against the product formula."""
    from .formfactor import amplitude_array

    pairs = 0
    worst = 0.0
    worst_sum = 0.0
    for M in range(1, L + 1):
        upper, lower, table = ed_formfactor_table(L, M)
        for col, p in enumerate(upper.states):
            formula = np.abs(amplitude_array(p, lower.states))
            oracle = np.abs(table[:, col])
            worst = max(worst, float(np.abs(formula - oracle).max()))
            worst_sum = max(worst_sum, abs(float(np.sum(formula**2)) - M / L))
            pairs += len(formula)
    return OracleComparison(L, pairs, worst, worst_sum)
