"""Thermodynamic-limit correlator from the Toeplitz/Cauchy determinant.

In the infinite chain at half filling the correlator factorizes,

    G(2N) = R_N^2 / 2,    G(2N + 1) = R_N R_{N+1} / 2,

with R_N = det[2 / (pi (1 - 2(i - j)))] a Cauchy determinant,

    R_N = (2/pi)^N prod_{k=1}^{N-1} [(2k)^2 / ((2k + 1)(2k - 1))]^{N-k}.

Its large-N expansion

    ln R_N = ln A - (1/4) ln N + S(N),
    S(N) = sum_{k>=2} (4^k - 1) B_{2k} / (k (k - 1) 4^k) N^{-2(k-1)},

is exact in the rationals, and pushing it through the factorization gives
the full asymptotic series of G(x) in 1/x with a uniform and a (-1)^x part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .luttinger.prefactors import luttinger_prediction_G
from .numerics.constants import CONSTANTS
from .numerics.series import (
    FormalSeries,
    series_binomial_pow,
    series_exp,
    series_substitute_shifted,
)
from .numerics.special import bernoulli

MAX_ORACLE_N = 16
PINNED_MAX_POWER = 8  # highest power with an independent reference value

_LN_2_OVER_PI = math.log(2 / math.pi)


# -- products ---------------------------------------------------------------


def _log_factor(k: int) -> float:
    """ln[(2k)^2 / ((2k+1)(2k-1))] = -log1p(-1/(4k^2))."""
    return -math.log1p(-1.0 / (4 * k * k))


def log_cauchy_R(N: int) -> float:
    if N < 0:
        raise ValueError("N must be >= 0")
    return math.fsum([N * _LN_2_OVER_PI] + [(N - k) * _log_factor(k) for k in range(1, N)])


def cauchy_R(N: int) -> float:
    """R_N from the closed product, summed in log space."""
    return math.exp(log_cauchy_R(N))


def log_R_table(n_max: int) -> np.ndarray:
    """ln R_N for N = 0..n_max by the increment ln R_{N+1} - ln R_N = ln(2/pi) + sum_{k<=N} l_k."""
    out = np.zeros(n_max + 1)
    tail = 0.0  # sum_{k=1}^{N} l_k
    comp = 0.0  # Kahan compensation for tail
    for N in range(n_max):
        if N:
            y = _log_factor(N) - comp
            t = tail + y
            comp = (t - tail) - y
            tail = t
        out[N + 1] = out[N] + _LN_2_OVER_PI + tail
    return out


def exact_G(x: int) -> float:
    """Thermodynamic correlator at integer separation x >= 1."""
    if x < 1:
        raise ValueError("x must be >= 1")
    N, odd = divmod(x, 2)
    if odd:
        return 0.5 * math.exp(log_cauchy_R(N) + log_cauchy_R(N + 1))
    return 0.5 * math.exp(2 * log_cauchy_R(N))


def exact_G_table(x_max: int) -> np.ndarray:
    """G(x) for x = 1..x_max (index 0 holds G(1)) from one incremental pass."""
    if x_max < 1:
        raise ValueError("x_max must be >= 1")
    lr = log_R_table(x_max // 2 + 1)
    x = np.arange(1, x_max + 1)
    N = x // 2
    log = np.where(x % 2 == 1, lr[N] + lr[np.minimum(N + 1, len(lr) - 1)], 2 * lr[N])
    return 0.5 * np.exp(log)


# -- determinant oracles ------------------------------------------------------


def symbol_fourier_coefficient(l: int) -> float:
    """M(l) of f(t) = e^{it} sign(pi/2 - |t|): 2 sin((1 - l) pi/2) / (pi (1 - l))."""
    n = 1 - l
    if n == 0:
        return 0.0
    if n % 2 == 0:
        return 0.0
    return 2.0 * (1 if (n - 1) % 4 == 0 else -1) / (math.pi * n)


def _quadrature_coefficients(lags: np.ndarray, nodes: int) -> np.ndarray:
    """M(l) by Gauss-Legendre on the three pieces where the symbol is smooth."""
    per_piece = max(nodes // 3, 2)
    t, w = np.polynomial.legendre.leggauss(per_piece)
    out = np.zeros(len(lags))
    for lo, hi, sign in ((-math.pi, -math.pi / 2, -1.0), (-math.pi / 2, math.pi / 2, 1.0), (math.pi / 2, math.pi, -1.0)):
        theta = 0.5 * (hi - lo) * t + 0.5 * (hi + lo)
        # the imaginary part integrates to zero by symmetry of the symbol
        vals = np.cos(np.outer(1 - lags, theta))
        out += sign * 0.5 * (hi - lo) * (vals @ w)
    return out / (2 * math.pi)


def toeplitz_oracle_R(N: int, fourier_nodes: int | None = None) -> float:
    """R_N as an N x N determinant with entries (-1)^{i-j} G0(2(i-j) - 1).

    G0(l) = 2 sin(pi l / 2) / (pi l).  With ``fourier_nodes`` the entries
    come from quadrature of the symbol instead of the closed form.
    """
    if not 0 <= N <= MAX_ORACLE_N:
        raise ValueError(f"oracle limited to 0 <= N <= {MAX_ORACLE_N}")
    if N == 0:
        return 1.0
    d = np.subtract.outer(np.arange(N), np.arange(N))
    if fourier_nodes is None:
        entries = 2.0 / (math.pi * (1 - 2 * d))
    else:
        # (-1)^d M(2d) equals the kernel entry
        lags = np.arange(-2 * (N - 1), 2 * N - 1, 2)
        table = dict(zip(lags.tolist(), _quadrature_coefficients(lags, fourier_nodes)))
        entries = np.vectorize(lambda k: (-1) ** abs(k) * table[2 * k])(d)
    return float(np.linalg.det(entries))


def toeplitz_oracle_G(x: int) -> float:
    """G(x) = det[M(i - j)]_{x x x} / 2 straight from the symbol."""
    if not 1 <= x <= 2 * MAX_ORACLE_N:
        raise ValueError(f"oracle limited to 1 <= x <= {2 * MAX_ORACLE_N}")
    d = np.subtract.outer(np.arange(x), np.arange(x))
    entries = np.vectorize(symbol_fourier_coefficient)(d)
    return 0.5 * float(np.linalg.det(entries))


# -- exact series -------------------------------------------------------------


def log_R_coefficient(k: int) -> Fraction:
    """Coefficient of N^{-2(k-1)} in S(N), k >= 2."""
    if k < 2:
        raise ValueError("k must be >= 2")
    return (4**k - 1) * bernoulli(2 * k) / (k * (k - 1) * 4**k)


def log_R_series(order: int) -> tuple[float, Fraction, FormalSeries]:
    """(ln A, -1/4, S) with S a series in 1/N truncated below N^{-order}."""
    if order < 2:
        raise ValueError("order must be >= 2")
    coeffs = [Fraction(0)] * order
    k = 2
    while 2 * (k - 1) < order:
        coeffs[2 * (k - 1)] = log_R_coefficient(k)
        k += 1
    return CONSTANTS.lnA, Fraction(-1, 4), FormalSeries("1/N", tuple(coeffs), order)


def even_branch_series(order: int) -> FormalSeries:
    """exp(2 S(x/2)) as a series in 1/x."""
    _, _, S = log_R_series(order)
    return series_exp((S * 2).scale_variable(2).rename("1/x"))


def odd_branch_series(order: int) -> FormalSeries:
    """(1 - x^{-2})^{-1/4} exp(S((x-1)/2) + S((x+1)/2)) as a series in 1/x."""
    _, _, S = log_R_series(order)
    total = series_substitute_shifted(S, -1, order) + series_substitute_shifted(S, 1, order)
    half = (order + 1) // 2
    binom = series_binomial_pow(Fraction(-1, 4), half, "1/x").dilate(2).truncate(order)
    return binom * series_exp(total)


@dataclass(frozen=True)
class AsymptoticExpansion:
    """G(x) ~ prefactor x^exponent sum_p (uniform[p] + (-1)^x staggered[p]) x^{-p}."""

    prefactor: float
    exponent: Fraction
    uniform: dict[int, Fraction]
    staggered: dict[int, Fraction]
    order: int
    meta: dict = field(default_factory=dict, compare=False)

    def branch(self, parity: int) -> dict[int, Fraction]:
        """Coefficients for even (parity 0) or odd (parity 1) x."""
        s = 1 if parity % 2 == 0 else -1
        powers = sorted(set(self.uniform) | set(self.staggered))
        return {p: self.uniform.get(p, Fraction(0)) + s * self.staggered.get(p, Fraction(0)) for p in powers}

    def evaluate(self, x: int, max_power: int | None = None) -> float:
        coeffs = self.branch(x % 2)
        total = math.fsum(float(c) * x ** (-p) for p, c in coeffs.items() if max_power is None or p <= max_power)
        return self.prefactor * x ** float(self.exponent) * total

    def records(self) -> list[dict]:
        rows = []
        for parity, table in (("uniform", self.uniform), ("staggered", self.staggered)):
            for p in sorted(table):
                c = table[p]
                rows.append(
                    {
                        "parity": parity,
                        "power": p,
                        "numerator": c.numerator,
                        "denominator": c.denominator,
                        "extrapolated": p > PINNED_MAX_POWER,
                    }
                )
        return rows


class UnstableExpansionError(RuntimeError):
    """Top coefficients moved when the internal order was raised."""


def _split(order: int) -> tuple[dict[int, Fraction], dict[int, Fraction]]:
    even = even_branch_series(order)
    odd = odd_branch_series(order)
    uniform, staggered = {}, {}
    for p in range(order):
        u = (even[p] + odd[p]) / 2
        s = (even[p] - odd[p]) / 2
        if p % 2:
            if u or s:
                raise ArithmeticError(f"odd power x^-{p} has a nonzero coefficient")
            continue
        uniform[p] = u
        if p:
            staggered[p] = s
        elif s:
            raise ArithmeticError("constant staggered term must vanish")
    return uniform, staggered


def exact_expansion(order: int = 8) -> AsymptoticExpansion:
    """Exact rational expansion up to and including x^{-order}."""
    if order < 4 or order % 2:
        raise ValueError("order must be even and >= 4")
    uniform, staggered = _split(order + 1)
    # two more even orders must leave the top two requested powers unchanged
    u2, s2 = _split(order + 5)
    for p in (order - 2, order):
        if u2[p] != uniform[p] or s2[p] != staggered[p]:
            raise UnstableExpansionError(f"coefficient of x^-{p} changed with the order")
    if uniform[0] != 1:
        raise ArithmeticError("leading uniform coefficient must be 1")
    prefactor = CONSTANTS.A**2 / math.sqrt(2)
    return AsymptoticExpansion(prefactor, Fraction(-1, 2), uniform, staggered, order)


def branches_from_split(expansion: AsymptoticExpansion) -> tuple[FormalSeries, FormalSeries]:
    """Rebuild the even- and odd-x series from the uniform/staggered tables."""
    n = expansion.order + 1
    even = [Fraction(0)] * n
    odd = [Fraction(0)] * n
    for p, c in expansion.branch(0).items():
        even[p] = c
    for p, c in expansion.branch(1).items():
        odd[p] = c
    return FormalSeries("1/x", tuple(even), n), FormalSeries("1/x", tuple(odd), n)


# -- comparison with the Luttinger prediction ---------------------------------


def fit_decay_exponent(xs: Sequence[int], residuals: Sequence[float]) -> float:
    """Positive exponent p of |residual| ~ x^{-p} by least squares in log-log."""
    xs = np.asarray(xs, float)
    r = np.abs(np.asarray(residuals, float))
    return float(-np.polyfit(np.log(xs), np.log(r), 1)[0])


@dataclass(frozen=True)
class ResidualRow:
    x: int
    exact: float
    luttinger: float
    series: float
    luttinger_residual: float  # exact - luttinger
    series_residual: float  # exact - series


@dataclass(frozen=True)
class ResidualReport:
    m_max: int
    order: int
    rows: tuple[ResidualRow, ...]
    exponent_even: float
    exponent_odd: float
    exponent_all: float


def series_residual_report(x_values: Sequence[int], m_max: int = 1, order: int = 8) -> ResidualReport:
    """Exact G(x) against the Luttinger prediction and the exact series."""
    xs = [int(x) for x in x_values]
    if min(xs) < 8:
        raise ValueError("x values must be >= 8")
    table = exact_G_table(max(xs))
    expansion = exact_expansion(order)
    rows = []
    for x in xs:
        g = float(table[x - 1])
        lut = luttinger_prediction_G(x, m_max)
        ser = expansion.evaluate(x)
        rows.append(ResidualRow(x, g, lut, ser, g - lut, g - ser))

    def fit(sel):
        pts = [r for r in rows if sel(r.x)]
        if len(pts) < 2:
            return float("nan")
        return fit_decay_exponent([r.x for r in pts], [r.luttinger_residual for r in pts])

    return ResidualReport(
        m_max,
        order,
        tuple(rows),
        fit(lambda x: x % 2 == 0),
        fit(lambda x: x % 2 == 1),
        fit(lambda x: True),
    )
