"""Verification check families used by ``xxcorr verify`` and friends.

Each family returns a list of :class:`CheckRecord`; a failing check is
recorded, never raised, so one run always reports every family.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .excitations import ParticleHoleConfig
from .luttinger import (
    appendix_integral_fminus,
    appendix_integral_fplus,
    appendix_integral_left_fminus,
    appendix_integral_left_fplus,
    branch_parameters,
    closed_form,
    coefficient_y,
    coefficient_y_exact,
    expected_shifted_sign,
    f_minus_left,
    f_minus_right,
    f_plus_left,
    f_plus_right,
    level_aggregate,
    particle_hole_convergence,
    scaling_relation_check,
    shifted_ratio_sign,
    sum_identity_partial,
    taylor_coefficient,
)
from .numerics import CONSTANTS, bernoulli
from .report import CheckRecord, check_close, check_equal
from .toeplitz import (
    branches_from_split,
    cauchy_R,
    even_branch_series,
    exact_expansion,
    exact_G,
    log_R_series,
    odd_branch_series,
    series_residual_report,
    toeplitz_oracle_R,
)
from .xxchain import ChainSpec, compare_with_formula, finite_correlator, formfactor, ground_state_momenta

# published expansion coefficients up to x^-8
PUBLISHED_EXPANSION = {
    ("staggered", 2): Fraction(-1, 8),
    ("uniform", 4): Fraction(1, 128),
    ("staggered", 4): Fraction(1, 8),
    ("uniform", 6): Fraction(-1, 64),
    ("staggered", 6): Fraction(-363, 1024),
    ("uniform", 8): Fraction(1707, 32768),
    ("staggered", 8): Fraction(1985, 1024),
}

PH_PAIRS = ((1, 0), (2, 0), (1, -1))
SCALING_LS = (64, 128, 256, 512)
# deviations are expected to decay like 1/L; measured decay is 1/L^2
SLOPE_TARGET, SLOPE_TOL = -1.0, 0.15


def trivial_checks() -> list[CheckRecord]:
    spec = ChainSpec(2, 1)
    psi = formfactor(ground_state_momenta(spec, "M"), ground_state_momenta(spec, "M-1"))
    return [
        check_close("formfactor L=2 M=1", 1 / math.sqrt(2), abs(psi), 1e-15, "trivial"),
        check_close("formfactor L=4 M=1", 0.5, abs(formfactor(ground_state_momenta(ChainSpec(4, 1), "M"), ground_state_momenta(ChainSpec(4, 1), "M-1"))), 1e-15, "trivial"),
        check_equal("R_0", 1.0, cauchy_R(0), "trivial"),
        check_close("R_1", 2 / math.pi, cauchy_R(1), 1e-15, "trivial"),
        check_equal("f-(0) = 1", Fraction(1), f_minus_right(0, Fraction(-1, 2)), "trivial"),
        check_equal("empty particle-hole sum", 1 + 0j, sum_identity_partial(Fraction(-1, 2), 0.6 * math.pi, 0), "trivial"),
    ]


def constants_checks() -> list[CheckRecord]:
    c = CONSTANTS
    return [
        check_close("A", 0.6450024, c.A, 1e-6, "published"),
        check_close("C0/(2 sqrt(pi))", 0.147088, c.c0 / (2 * math.sqrt(math.pi)), 1e-5, "published"),
        check_close("A^2 - pi G(1/2)^4", 0.0, c.identity_gap(), 1e-6),
        check_close("A^2/sqrt(2) vs C0/sqrt(pi)", c.c0 / math.sqrt(math.pi), c.leading_amplitude, 1e-6, relative=True),
    ]


def prefactor_checks(m_max: int = 10) -> list[CheckRecord]:
    out = [
        check_equal("y_1", Fraction(-1, 8), coefficient_y_exact(1), "published"),
        check_equal("y_2", Fraction(9, 32768), coefficient_y_exact(2), "published"),
    ]
    for m in range(1, m_max + 1):
        y = coefficient_y(m)
        ok = math.isfinite(y) and y != 0 and math.copysign(1, y) == (-1) ** m
        out.append(CheckRecord(f"y_{m} finite with sign (-1)^{m}", (-1) ** m, y, None, ok))
        out.append(check_close(f"y_{m} float vs rational", float(coefficient_y_exact(m)), y, 1e-10, relative=True))
    return out


def exact_series_checks(order: int = 8) -> list[CheckRecord]:
    e = exact_expansion(order)
    out = []
    for (parity, power), value in PUBLISHED_EXPANSION.items():
        table = e.uniform if parity == "uniform" else e.staggered
        out.append(check_equal(f"{parity} x^-{power}", value, table.get(power), "published"))
    out.append(check_equal("uniform x^0", Fraction(1), e.uniform[0]))
    out.append(check_equal("uniform x^-2 (agrees with Luttinger: none)", Fraction(0), e.uniform[2]))
    out.append(check_equal("staggered x^-2 = y_1", coefficient_y_exact(1), e.staggered[2]))
    out.append(CheckRecord("uniform x^-4 has no Luttinger counterpart", "nonzero", e.uniform[4], None, e.uniform[4] != 0))
    even, odd = branches_from_split(e)
    out.append(check_equal("even branch recombination", even_branch_series(order + 1).coeffs, even.coeffs))
    out.append(check_equal("odd branch recombination", odd_branch_series(order + 1).coeffs, odd.coeffs))
    for x in (64, 65, 200, 201):
        out.append(check_close(f"series vs exact G({x})", exact_G(x), e.evaluate(x), 1e-10, relative=True))
    return out


def log_series_checks() -> list[CheckRecord]:
    lnA, quarter, S = log_R_series(8)
    lhs = math.log(cauchy_R(64))
    rhs = lnA + quarter * math.log(64) + S.evaluate(1 / 64)
    return [
        check_equal("B_4", Fraction(-1, 30), bernoulli(4)),
        check_equal("ln R coefficient N^-2", Fraction(-1, 64), S[2]),
        check_equal("ln R coefficient N^-4", Fraction(1, 256), S[4]),
        check_close("ln R_64 vs series", lhs, rhs, 1e-12),
    ]


def toeplitz_oracle_checks(n_max: int = 12) -> list[CheckRecord]:
    out = []
    for N in range(1, n_max + 1):
        out.append(check_close(f"R_{N} product vs determinant", toeplitz_oracle_R(N), cauchy_R(N), 1e-9, relative=True))
    out.append(check_close("R_6 determinant from symbol quadrature", cauchy_R(6), toeplitz_oracle_R(6, fourier_nodes=192), 1e-8, relative=True))
    return out


def ed_checks(L_values=(4, 6, 8)) -> list[CheckRecord]:
    out = []
    for L in L_values:
        cmp = compare_with_formula(L)
        out.append(check_close(f"ED vs formula |psi| L={L} ({cmp.pairs} pairs)", 0.0, cmp.max_abs_diff, 1e-10))
        out.append(check_close(f"completeness L={L}", 0.0, cmp.max_completeness_error, 1e-12))
    return out


def sum_identity_checks(cutoff: int = 20, phase: float = 0.6 * math.pi) -> list[CheckRecord]:
    a, c = Fraction(-1, 2), Fraction(1, 2)
    out = []
    for k in range(7):
        out.append(check_equal(f"right level {k} aggregate", taylor_coefficient(a * a, k), level_aggregate(k, a, "right")))
        out.append(check_equal(f"left level {k} aggregate", taylor_coefficient(c * c, k), level_aggregate(k, c, "left")))
    for param, branch in ((a, "right"), (c, "left")):
        err = abs(sum_identity_partial(param, phase, cutoff, branch) - closed_form(param, phase, branch))
        out.append(CheckRecord(f"{branch} partial sum at cutoff {cutoff} vs closed form", 0.0, err, 1e-6, err <= 1e-6))
    return out


def appendix_checks() -> list[CheckRecord]:
    out = []
    worst = 0.0
    for a in (-0.5, -0.25):
        for p in range(1, 5):
            worst = max(worst, abs(appendix_integral_fplus(p, a) - f_plus_right(p, a)))
        for q in range(-4, 1):
            worst = max(worst, abs(appendix_integral_fminus(q, a) - f_minus_right(q, a)))
    for c in (0.5, 0.25):
        for p in range(-4, 0):
            worst = max(worst, abs(appendix_integral_left_fplus(p, c) - f_plus_left(p, c)))
        for q in range(0, 5):
            worst = max(worst, abs(appendix_integral_left_fminus(q, c) - f_minus_left(q, c)))
    out.append(check_close("Fourier integrals vs Gamma ratios (max error)", 0.0, worst, 1e-8))
    return out


def compare_checks(x_max: int = 512) -> list[CheckRecord]:
    xs = range(32, x_max + 1)
    r1 = series_residual_report(xs, 1)
    r0 = series_residual_report(xs, 0)
    return [
        check_close("residual exponent, 2-term prediction", 4.5, r1.exponent_all, 0.1),
        check_close("residual exponent, 1-term prediction", 2.5, r0.exponent_all, 0.1),
        check_close("series vs exact G(64), order 8", 0.0, abs(r1.rows[64 - 32].series_residual / r1.rows[64 - 32].exact), 1e-12),
    ]


def scaling_checks(Ls=SCALING_LS, m_values=(0, 1, 2)) -> list[CheckRecord]:
    out = []
    for m in m_values:
        rep = scaling_relation_check(m, Ls)
        out.append(CheckRecord(f"scaling m={m} converges", 0.0, rep.deviations[-1], 1e-3, rep.monotone and abs(rep.deviations[-1]) < 1e-3))
        out.append(check_close(f"scaling m={m} deviation slope", SLOPE_TARGET, rep.slope, SLOPE_TOL))
        for L in (Ls[0], Ls[0] + 2):
            spec = ChainSpec.half_filled(L)
            out.append(check_equal(f"sign of psi_{m}/psi_0 at L={L}", expected_shifted_sign(spec.M, m), shifted_ratio_sign(spec, m)))
    for m in m_values:
        a, c = branch_parameters(m)
        ok = a == Fraction(2 * m - 1, 2) and c == Fraction(2 * m + 1, 2)
        out.append(CheckRecord(f"branch parameters m={m}", f"{2*m-1}/2,{2*m+1}/2", f"{a},{c}", None, ok, "trivial"))
    return out


def particle_hole_checks(Ls=SCALING_LS, m_values=(0, 1, 2)) -> list[CheckRecord]:
    out = []
    for m in m_values:
        for p, q in PH_PAIRS:
            rep = particle_hole_convergence(ParticleHoleConfig(m, right=((p, q),)), Ls)
            name = f"particle-hole m={m} (p,q)=({p},{q})"
            out.append(CheckRecord(f"{name} converges", rep.target, rep.values[-1], 1e-3, rep.monotone and abs(rep.deviations[-1]) < 1e-3))
            out.append(check_close(f"{name} deviation slope", SLOPE_TARGET, rep.slope, SLOPE_TOL))
    return out


def correlator_checks(L: int = 2048, x_max: int = 32) -> list[CheckRecord]:
    """Finite chain against the infinite one; the chord-length correction removes the leading finite-size term."""
    spec = ChainSpec.half_filled(L)
    raw = 0.0
    chord = 0.0
    for x in range(1, x_max + 1):
        f, g = finite_correlator(spec, x), exact_G(x)
        raw = max(raw, abs(f / g - 1))
        conformal = math.sqrt(x / ((L / math.pi) * math.sin(math.pi * x / L)))
        chord = max(chord, abs(f / (g * conformal) - 1))
    return [
        check_close(f"finite L={L} vs thermodynamic G, x<={x_max}", 0.0, raw, 2.5e-4),
        check_close(f"finite L={L} vs chord-corrected G, x<={x_max}", 0.0, chord, 1e-6),
    ]


def verify(level: str = "quick") -> list[CheckRecord]:
    if level not in ("quick", "full"):
        raise ValueError("level must be 'quick' or 'full'")
    records = trivial_checks() + constants_checks() + prefactor_checks() + exact_series_checks()
    records += log_series_checks() + toeplitz_oracle_checks() + appendix_checks() + sum_identity_checks()
    records += compare_checks()
    if level == "quick":
        records += ed_checks((4, 6)) + scaling_checks((64, 128, 256)) + particle_hole_checks((64, 128, 256))
    else:
        records += ed_checks((4, 6, 8)) + scaling_checks() + particle_hole_checks() + correlator_checks()
    return records
