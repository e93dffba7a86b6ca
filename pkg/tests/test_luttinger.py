import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from xxcorr.excitations import ParticleHoleConfig
from xxcorr.luttinger import (
    XX_POINT,
    LuttingerParams,
    NonConvergentIntegralError,
    appendix_integral_fminus,
    appendix_integral_fplus,
    appendix_integral_left_fminus,
    appendix_integral_left_fplus,
    branch_parameters,
    cauchy_determinant_factor,
    coefficient_y,
    coefficient_y_exact,
    f_factors_left,
    f_minus_left,
    f_minus_right,
    f_plus_left,
    f_plus_right,
    luttinger_prediction_G,
    particle_hole_convergence,
    ph_formfactor_prediction,
    prediction_series,
    prefactor_C,
    psi_m_asymptotic,
    scaling_relation_check,
)
from xxcorr.luttinger.appendix import imaginary_residual
from xxcorr.numerics import CONSTANTS, PoleError
from xxcorr.toeplitz import exact_G

H = Fraction(1, 2)


# -- F-factors -----------------------------------------------------------------


def test_f_plus_right_examples():
    assert f_plus_right(1, -H) == -H
    assert f_plus_right(2, -H) == Fraction(-1, 4)
    assert f_plus_right(1, Fraction(3, 7)) == Fraction(3, 7)
    assert f_plus_right(2, -0.5) == pytest.approx(-0.25, abs=1e-15)


def test_f_minus_right_examples():
    assert f_minus_right(0, -H) == 1
    assert f_minus_right(0, Fraction(5, 3)) == 1
    assert f_minus_right(-1, -H) == Fraction(3, 2)


def test_f_factors_left_examples():
    assert f_minus_left(0, H) == H
    assert f_plus_left(-1, H) == 1
    assert f_minus_left(0, 1) == 1
    assert f_factors_left(-1, 0, H) == (1, H)


def test_pole_errors():
    with pytest.raises(PoleError):
        f_plus_right(1, 0)
    with pytest.raises(PoleError):
        f_minus_right(0, 1)
    with pytest.raises(PoleError):
        f_plus_left(-1, 2)
    with pytest.raises(PoleError):
        f_minus_left(0, -1)


def test_sign_convention_errors():
    with pytest.raises(ValueError):
        f_plus_right(0, -H)
    with pytest.raises(ValueError):
        f_minus_right(1, -H)
    with pytest.raises(ValueError):
        f_plus_left(0, H)
    with pytest.raises(ValueError):
        f_minus_left(-1, H)


half_integers = st.integers(-6, 6).map(lambda k: Fraction(2 * k + 1, 2))


@given(st.integers(1, 12), st.integers(-12, 0), half_integers)
def test_exact_and_float_paths_agree(p, q, a):
    assert float(f_plus_right(p, a)) == pytest.approx(f_plus_right(p, float(a)), rel=1e-12)
    assert float(f_minus_right(q, a)) == pytest.approx(f_minus_right(q, float(a)), rel=1e-12)


@st.composite
def right_configs(draw):
    n = draw(st.integers(0, 3))
    ps = draw(st.lists(st.integers(1, 9), min_size=n, max_size=n, unique=True))
    qs = draw(st.lists(st.integers(-9, 0), min_size=n, max_size=n, unique=True))
    return tuple(ps), tuple(qs)


@given(right_configs(), half_integers)
def test_branch_duality(config, a):
    # mirroring the offsets maps the right branch at a onto the left branch at c = -a
    ps, qs = config
    right = cauchy_determinant_factor(ps, qs, "right", a)
    left = cauchy_determinant_factor(tuple(-p for p in ps), tuple(-q for q in qs), "left", -a)
    assert left == right


def test_cauchy_factor_examples():
    assert cauchy_determinant_factor((), (), "right", -H) == 1
    assert cauchy_determinant_factor((1,), (0,), "right", -H) == -H
    ps, qs, a = (1, 3), (0, -2), Fraction(-1, 2)
    det = Fraction(1, (ps[0] - qs[0]) * (ps[1] - qs[1])) - Fraction(1, (ps[0] - qs[1]) * (ps[1] - qs[0]))
    expected = det * f_plus_right(1, a) * f_plus_right(3, a) * f_minus_right(0, a) * f_minus_right(-2, a)
    assert cauchy_determinant_factor(ps, qs, "right", a) == expected
    assert float(expected) == pytest.approx(cauchy_determinant_factor(ps, qs, "right", -0.5), rel=1e-12)
    with pytest.raises(ValueError):
        cauchy_determinant_factor((1,), (), "right", a)
    with pytest.raises(ValueError):
        cauchy_determinant_factor((1,), (0,), "up", a)


def test_ph_prediction_examples():
    psi = 0.37
    assert ph_formfactor_prediction(psi, ParticleHoleConfig(2)) == psi
    assert ph_formfactor_prediction(psi, ParticleHoleConfig(0, right=((1, 0),))) == pytest.approx(-psi / 2)
    assert ph_formfactor_prediction(psi, ParticleHoleConfig(0, left=((-1, 0),))) == pytest.approx(-psi / 2)


def test_branch_parameters_plumbing():
    for m in range(6):
        assert branch_parameters(m) == (Fraction(2 * m - 1, 2), Fraction(2 * m + 1, 2))
        xi = 1.0
        r = math.sqrt(xi)
        assert float(branch_parameters(m)[0]) == -r / 2 + m / r
        assert float(branch_parameters(m)[1]) == r / 2 + m / r
    assert XX_POINT.xi == 1 and XX_POINT.pF == pytest.approx(math.pi / 2)


def test_non_xx_parameters_warn():
    with pytest.warns(UserWarning, match="untested"):
        a, c = branch_parameters(1, LuttingerParams(xi=2.0))
    assert a == pytest.approx(-math.sqrt(2) / 2 + 1 / math.sqrt(2))


# -- prefactors ------------------------------------------------------------------------


def test_psi_m_asymptotic_examples():
    assert psi_m_asymptotic(0.8, 0, 100) == pytest.approx(0.8, rel=1e-14)
    assert psi_m_asymptotic(0.8, 1, 100) == pytest.approx(0.8 * math.pi / 100 / 2, rel=1e-13)


def test_prefactor_c0():
    assert prefactor_C(0) / (2 * math.sqrt(math.pi)) == pytest.approx(0.147088, abs=1e-5)


def test_prefactors_consistent_with_y():
    # C_m x^{-1/2-2m^2} at distance x/pi is the x-space term (C_0/sqrt(pi)) y_m x^{-1/2-2m^2}
    lead = prefactor_C(0) / math.sqrt(math.pi)
    for m in range(0, 7):
        y = coefficient_y(m) if m else 1.0
        assert prefactor_C(m) == pytest.approx(lead * y * math.pi ** (0.5 + 2 * m * m), rel=1e-12)


def test_y_exact_values():
    assert coefficient_y_exact(1) == Fraction(-1, 8)
    assert coefficient_y_exact(2) == Fraction(9, 32768)
    assert coefficient_y_exact(3) == Fraction(-18225, 2**35)


def test_y_table_signs_and_float_path():
    for m in range(1, 11):
        y = coefficient_y(m)
        assert math.isfinite(y) and math.copysign(1, y) == (-1) ** m
        assert y == pytest.approx(float(coefficient_y_exact(m)), rel=1e-10)


def test_prediction_series_invariants():
    s = prediction_series(6)
    exps = [t.exponent for t in s.terms]
    assert exps == sorted(exps) and len(set(exps)) == len(exps)
    assert all(math.copysign(1, t.prefactor) == (-1) ** t.m for t in s.terms)
    assert s.terms[2].oscillation(3) == pytest.approx(math.cos(2 * math.pi * 3))


def test_luttinger_prediction_examples():
    lead = CONSTANTS.c0 / math.sqrt(math.pi)
    assert luttinger_prediction_G(100, 0) == pytest.approx(lead * 0.1, rel=1e-15)
    x = 10
    assert luttinger_prediction_G(x, 1) == pytest.approx(lead * x**-0.5 * (1 - 1 / (8 * x * x)), rel=1e-14)
    # two-term prediction misses the (1/128 + (-1)^x/8) x^{-4.5} term of the exact result
    x = 20
    miss = exact_G(x) - luttinger_prediction_G(x, 2)
    assert miss == pytest.approx(lead * (1 / 128 + 1 / 8) * x**-4.5, rel=0.05)
    with pytest.raises(ValueError):
        luttinger_prediction_G(0.5, 1)


# -- finite-L convergence ------------------------------------------------------------


def test_scaling_m0_leading_identity():
    rep = scaling_relation_check(0)
    assert rep.target == pytest.approx(CONSTANTS.c0)
    assert abs(rep.deviations[-1]) < 1e-5 and rep.monotone


@pytest.mark.parametrize("m", [1, 2])
def test_scaling_converges(m):
    rep = scaling_relation_check(m)
    assert rep.monotone
    assert abs(rep.deviations[-1]) < 1e-3
    # measured finite-size decay of the deviation is 1/L^2
    assert rep.slope == pytest.approx(-2.0, abs=0.05)


def test_scaling_rejects_other_xi():
    with pytest.raises(NotImplementedError):
        scaling_relation_check(1, params=LuttingerParams(xi=2.0))


@pytest.mark.parametrize(
    "config",
    [
        ParticleHoleConfig(0, right=((1, 0),)),
        ParticleHoleConfig(1, right=((2, 0),)),
        ParticleHoleConfig(2, right=((1, -1),)),
        ParticleHoleConfig(0, left=((-1, 0),)),
        ParticleHoleConfig(1, left=((-2, 1),)),
        ParticleHoleConfig(0, right=((1, 0), (3, -1))),
        ParticleHoleConfig(1, right=((2, -1),), left=((-1, 0),)),
    ],
)
def test_particle_hole_ratios_converge(config):
    rep = particle_hole_convergence(config)
    assert rep.monotone
    assert abs(rep.deviations[-1]) < 1e-3
    assert rep.slope == pytest.approx(-2.0, abs=0.05)


# -- Fourier-integral representations ---------------------------------------------------


def test_appendix_examples():
    assert appendix_integral_fplus(1, -0.5) == pytest.approx(-0.5, abs=1e-12)
    assert appendix_integral_fplus(2, -0.5) == pytest.approx(-0.25, abs=1e-12)
    assert appendix_integral_fplus(1, -0.25) == pytest.approx(-0.25, abs=1e-12)


def test_appendix_grid_matches_gamma():
    for a in (-0.5, -0.25):
        for p in range(1, 5):
            assert appendix_integral_fplus(p, a) == pytest.approx(f_plus_right(p, a), abs=1e-8)
        for q in range(-4, 1):
            assert appendix_integral_fminus(q, a) == pytest.approx(f_minus_right(q, a), abs=1e-8)
    for c in (0.5, 0.25):
        for p in range(-4, 0):
            assert appendix_integral_left_fplus(p, c) == pytest.approx(f_plus_left(p, c), abs=1e-8)
        for q in range(0, 5):
            assert appendix_integral_left_fminus(q, c) == pytest.approx(f_minus_left(q, c), abs=1e-8)


def test_appendix_regularized_beyond_grid():
    # exponents below -1 go through the Abel-regularized path
    assert appendix_integral_left_fminus(3, 1.5) == pytest.approx(f_minus_left(3, 1.5), abs=1e-8)
    assert appendix_integral_fminus(-3, -1.5) == pytest.approx(f_minus_right(-3, -1.5), abs=1e-8)
    assert imaginary_residual(3, -0.75) < 1e-12


def test_appendix_rejects_divergent_fplus():
    with pytest.raises(NonConvergentIntegralError):
        appendix_integral_fplus(1, 0.5)
    with pytest.raises(ValueError):
        appendix_integral_fplus(0, -0.5)
