import math
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xxcorr.excitations import OverlapError, ParticleHoleConfig
from xxcorr.luttinger import expected_shifted_sign, psi_m_asymptotic, shifted_ratio_sign
from xxcorr.toeplitz import exact_G
from xxcorr.xxchain import (
    ChainSpec,
    Grid,
    GridMismatchError,
    MomentumSet,
    OffsetRangeError,
    ShiftTooLargeError,
    SizeMismatchError,
    compare_with_formula,
    ed_formfactor_table,
    ed_oracle_formfactor,
    finite_correlator,
    formfactor,
    ground_state_momenta,
    particle_hole_amplitude,
    particle_hole_formfactor,
    sector_eigenbasis,
    sector_states,
    shifted_ground_amplitude,
    shifted_ground_formfactor,
)
from xxcorr.xxchain.ed import golden_rows, read_golden

GOLDEN = Path(__file__).parent / "data" / "golden_ed.csv"


# -- states -------------------------------------------------------------------


def test_chain_spec_validation():
    with pytest.raises(ValueError):
        ChainSpec(7, 3)
    with pytest.raises(ValueError):
        ChainSpec(8, 9)


def test_ground_state_examples():
    spec = ChainSpec(8, 3)
    p = ground_state_momenta(spec, "M")
    q = ground_state_momenta(spec, "M-1")
    np.testing.assert_allclose(p.momenta, [-math.pi / 4, 0, math.pi / 4], atol=1e-15)
    np.testing.assert_allclose(q.momenta, [-math.pi / 8, math.pi / 8], atol=1e-15)
    assert p.grid is Grid.INTEGER and q.grid is Grid.HALF_INTEGER
    assert len(ground_state_momenta(ChainSpec(2, 1), "M-1")) == 0


def test_sector_sizes():
    for L in (4, 6, 8):
        for n in range(L + 1):
            assert len(sector_states(L, n)) == math.comb(L, n)


# -- product formula ------------------------------------------------------------


def test_formfactor_trivial_values():
    for L, expected in ((2, 1 / math.sqrt(2)), (4, 0.5)):
        spec = ChainSpec(L, 1)
        psi = formfactor(ground_state_momenta(spec, "M"), ground_state_momenta(spec, "M-1"))
        assert psi == pytest.approx(expected, abs=1e-15)


def test_formfactor_l4_ground_vs_ed():
    spec = ChainSpec(4, 2)
    p, q = ground_state_momenta(spec, "M"), ground_state_momenta(spec, "M-1")
    assert abs(formfactor(p, q)) == pytest.approx(abs(ed_oracle_formfactor(spec, p, q)), abs=1e-12)


def test_formfactor_argument_errors():
    spec = ChainSpec(8, 3)
    p = ground_state_momenta(spec, "M")
    with pytest.raises(SizeMismatchError):
        formfactor(p, ground_state_momenta(ChainSpec(8, 1), "M"))
    with pytest.raises(GridMismatchError):
        formfactor(p, MomentumSet.from_doubled(8, [-2, 2]))


@st.composite
def state_pairs(draw):
    L = draw(st.sampled_from([8, 12, 16, 32]))
    M = draw(st.integers(1, L))
    p = draw(st.sampled_from(sector_states(L, M))) if math.comb(L, M) < 5000 else ground_state_momenta(ChainSpec(L, M), "M")
    qs = sector_states(L, M - 1) if math.comb(L, M - 1) < 5000 else [ground_state_momenta(ChainSpec(L, M), "M-1")]
    return p, draw(st.sampled_from(qs))


@settings(max_examples=60, deadline=None)
@given(state_pairs(), st.integers(-5, 5))
def test_uniform_translation_is_a_phase(pair, shift):
    p, q = pair
    psi = formfactor(p, q)
    assert abs(psi) <= 1 + 1e-12
    moved = formfactor(MomentumSet.from_doubled(p.L, p.doubled + 2 * shift), MomentumSet.from_doubled(q.L, q.doubled + 2 * shift))
    assert abs(moved) == pytest.approx(abs(psi), rel=1e-12, abs=1e-15)


@settings(max_examples=60, deadline=None)
@given(state_pairs())
def test_umklapp_representatives(pair):
    # wrapping indices by L changes at most the sign of the state vector
    p, q = pair
    a, b = formfactor(p, q), formfactor(p.canonical(), q.canonical())
    assert abs(b) == pytest.approx(abs(a), rel=1e-12, abs=1e-15)
    if abs(a) > 1e-12:
        ratio = b / a
        assert abs(abs(ratio.real) - 1) < 1e-10 and abs(ratio.imag) < 1e-10


# -- ED oracle --------------------------------------------------------------------


@pytest.mark.parametrize("L", [2, 4, 6, 8])
def test_formula_matches_ed(L):
    cmp = compare_with_formula(L)
    assert cmp.max_abs_diff <= 1e-10
    assert cmp.max_completeness_error <= 1e-12


def test_ed_l2_ground():
    spec = ChainSpec(2, 1)
    val = ed_oracle_formfactor(spec, ground_state_momenta(spec, "M"), ground_state_momenta(spec, "M-1"))
    assert abs(val) == pytest.approx(1 / math.sqrt(2), abs=1e-14)


def test_ed_energies_match_momentum_sets():
    basis = sector_eigenbasis(8, 4)
    assert np.allclose(basis.energies, [s.energy() for s in basis.states], atol=1e-10)


def test_ed_size_limit():
    with pytest.raises(ValueError):
        sector_eigenbasis(10, 5)


@pytest.mark.parametrize("L, M", [(6, 3), (8, 4), (8, 5)])
def test_gauge_invariant_loops(L, M):
    """psi(p1,q1) psi(p2,q2) / (psi(p1,q2) psi(p2,q1)) does not depend on eigenvector phases."""
    upper, lower, table = ed_formfactor_table(L, M)
    rng = np.random.default_rng(L * 10 + M)
    checked = 0
    while checked < 40:
        i1, i2 = rng.choice(len(upper.states), 2, replace=False)
        j1, j2 = rng.choice(len(lower.states), 2, replace=False)
        ed = [table[j1, i1], table[j2, i2], table[j2, i1], table[j1, i2]]
        if min(abs(v) for v in ed) < 1e-6:
            continue
        p1, p2 = upper.states[i1], upper.states[i2]
        q1, q2 = lower.states[j1], lower.states[j2]
        f = [formfactor(p1, q1), formfactor(p2, q2), formfactor(p1, q2), formfactor(p2, q1)]
        assert f[0] * f[1] / (f[2] * f[3]) == pytest.approx(ed[0] * ed[1] / (ed[2] * ed[3]), rel=1e-9)
        checked += 1


def test_golden_file_unchanged():
    stored = read_golden(GOLDEN)
    fresh = golden_rows()
    assert [r[:4] for r in stored] == [r[:4] for r in fresh]
    for s, f in zip(stored, fresh):
        assert f[4] == pytest.approx(s[4], abs=1e-12)


# -- shifted and excited states -------------------------------------------------------


def test_shifted_m0_is_ground():
    spec = ChainSpec.half_filled(64)
    assert shifted_ground_formfactor(spec, 0) == formfactor(ground_state_momenta(spec, "M"), ground_state_momenta(spec, "M-1"))


def test_shift_guard():
    with pytest.raises(ShiftTooLargeError):
        shifted_ground_formfactor(ChainSpec.half_filled(16), 2)


def test_psi1_ratio_tends_to_pi_over_2L():
    devs = []
    for L in (64, 128, 256):
        spec = ChainSpec.half_filled(L)
        ratio = abs(shifted_ground_amplitude(spec, 1) / shifted_ground_amplitude(spec, 0))
        devs.append(ratio / (math.pi / (2 * L)) - 1)
    assert abs(devs[-1]) < 1e-4
    assert abs(devs[0]) > abs(devs[1]) > abs(devs[2])


def test_psi2_ratio_tends_to_asymptotic():
    devs = []
    for L in (64, 128, 256):
        spec = ChainSpec.half_filled(L)
        ratio = abs(shifted_ground_amplitude(spec, 2) / shifted_ground_amplitude(spec, 0))
        devs.append(ratio / psi_m_asymptotic(1.0, 2, L) - 1)
    assert abs(devs[-1]) < 1e-3
    assert abs(devs[0]) > abs(devs[1]) > abs(devs[2])


@pytest.mark.parametrize("L", [64, 66, 128, 130])
def test_shifted_ratio_sign_rule(L):
    spec = ChainSpec.half_filled(L)
    for m in range(4):
        assert shifted_ratio_sign(spec, m) == expected_shifted_sign(spec.M, m)


def test_particle_hole_empty_config():
    spec = ChainSpec.half_filled(128)
    for m in (0, 1, 2):
        assert particle_hole_formfactor(spec, ParticleHoleConfig(m)) == shifted_ground_formfactor(spec, m)


@pytest.mark.parametrize("m, target", [(0, -0.5), (1, 0.5)])
def test_particle_hole_single_pair(m, target):
    spec = ChainSpec.half_filled(256)
    config = ParticleHoleConfig(m, right=((1, 0),))
    ratio = particle_hole_amplitude(spec, config) / shifted_ground_amplitude(spec, m)
    assert ratio == pytest.approx(target, abs=1e-3)


def test_particle_hole_errors():
    with pytest.raises(OverlapError):
        ParticleHoleConfig(0, right=((1, 0), (1, -1)))
    with pytest.raises(ValueError):
        ParticleHoleConfig(0, right=((0, 0),))
    with pytest.raises(ValueError):
        ParticleHoleConfig(0, left=((1, 0),))
    with pytest.raises(OffsetRangeError):
        particle_hole_formfactor(ChainSpec.half_filled(32), ParticleHoleConfig(0, right=((4, 0),)))


# -- finite-L correlator -------------------------------------------------------------


@pytest.fixture(scope="module")
def chain_2048():
    return ChainSpec.half_filled(2048)


def test_finite_correlator_small_x(chain_2048):
    assert finite_correlator(chain_2048, 1) == pytest.approx(1 / math.pi, rel=1e-6)
    assert finite_correlator(chain_2048, 2) == pytest.approx(2 / math.pi**2, rel=1e-5)


def test_finite_correlator_vs_thermodynamic(chain_2048):
    L = chain_2048.L
    for x in range(1, 33):
        f, g = finite_correlator(chain_2048, x), exact_G(x)
        assert f > 0
        # frozen regression bound on the raw finite-size deviation
        assert abs(f / g - 1) <= 2.5e-4
        # the chord length L/pi sin(pi x/L) absorbs the leading correction
        chord = math.sqrt(x / ((L / math.pi) * math.sin(math.pi * x / L)))
        assert abs(f / (g * chord) - 1) <= 1e-6


def test_finite_correlator_preconditions():
    with pytest.raises(ValueError):
        finite_correlator(ChainSpec(64, 20), 3)
    with pytest.raises(ValueError):
        finite_correlator(ChainSpec.half_filled(64), 32)
