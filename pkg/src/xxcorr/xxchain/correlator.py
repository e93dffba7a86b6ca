"""Finite-L transverse correlator from the fermionic determinant.

With A_i = c+_i + c_i, B_i = c+_i - c_i and Wick's theorem,

    <s+_x s-_0> = 1/2 det[<B_i A_j>],  i = 0..x-1, j = 1..x,
    <B_i A_j> = 2 rho(i - j) - delta_ij,

where rho(l) = <c+_0 c_l> is evaluated on the finite-L Fermi sea.
"""

from __future__ import annotations

import numpy as np

from .states import ChainSpec, ground_state_momenta


def fermion_correlation(spec: ChainSpec, lags: np.ndarray) -> np.ndarray:
    """rho(l) = (1/L) sum_{k occupied} e^{-i k l} on the M-particle ground state."""
    k = ground_state_momenta(spec, "M").momenta
    lags = np.asarray(lags)
    rho = np.exp(-1j * np.multiply.outer(lags, k)).sum(axis=-1) / spec.L
    if np.abs(rho.imag).max(initial=0.0) > 1e-12:
        raise RuntimeError("ground-state correlation is expected to be real")
    return rho.real


def finite_correlator(spec: ChainSpec, x: int) -> float:
    """<s+_x s-_0> in the half-filled ground state of a chain of L sites."""
    if spec.M * 2 != spec.L:
        raise ValueError("finite_correlator expects half filling, M = L/2")
    if not 0 < x < spec.L / 2:
        raise ValueError(f"need 0 < x < L/2, got x={x}")
    lags = np.arange(-x, x + 1)
    kernel = 2.0 * fermion_correlation(spec, lags) - (lags == 0)
    i = np.arange(x)[:, None]
    j = np.arange(1, x + 1)[None, :]
    sign, logdet = np.linalg.slogdet(kernel[i - j + x])
    return float(0.5 * sign * np.exp(logdet))
