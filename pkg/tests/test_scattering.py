import cmath
import math

import pytest

from wedgescatter import (
    BoundaryKind,
    DomainError,
    PotentialSpec,
    WaveState,
    dminus_amplitudes,
    plane_wave_bc,
    propagate,
    q_eval,
    q_prime,
    rt_amplitudes,
    scattering_run,
    wkb_bc,
)


def test_plane_wave_bc_values():
    s = plane_wave_bc(4.0, 1.0)
    assert (s.x, s.value, s.derivative) == (1.0, 1.0, 2j)
    s = plane_wave_bc(1.0, 5.0)
    assert (s.x, s.value, s.derivative) == (5.0, 1.0, 1j)
    s = plane_wave_bc(0.76, 1.0)
    assert s.derivative == pytest.approx(1j * math.sqrt(0.76), abs=1e-15)


def test_plane_wave_bc_rejects_nonpositive_energy():
    with pytest.raises(DomainError):
        plane_wave_bc(0.0, 1.0)
    with pytest.raises(DomainError):
        plane_wave_bc(-1.0, 1.0)


def test_wkb_bc_values():
    s = wkb_bc(PotentialSpec(4, 5.0), 1.0)
    assert s.value == 1.0
    assert s.derivative == pytest.approx(1j * math.sqrt(626.0) - 125.0 / 626.0, abs=1e-12)

    s = wkb_bc(PotentialSpec(6, 1.0), 0.0)  # Q(L) = 1, Q'(L) = 6
    assert s.derivative == pytest.approx(1j - 1.5, abs=1e-15)

    spec = PotentialSpec(8, 5.0)
    q, qp = 390626.36, 625000.0
    s = wkb_bc(spec, 1.36)
    assert s.derivative == pytest.approx(1j * math.sqrt(q) - qp / (4 * q), abs=1e-9)


def test_wkb_bc_rejects_nonpositive_q():
    with pytest.raises(DomainError):
        wkb_bc(PotentialSpec(4, 1.0), -2.0)  # Q(L) = -1


def test_rt_amplitudes_free_particle_identity():
    e, L = 2.0, 1.0
    root = math.sqrt(e)
    y = cmath.exp(-2j * L * root)
    end = WaveState(-L, y, 1j * root * y)
    a, b, ratio = rt_amplitudes(end, e, L)
    assert ratio < 1e-15
    assert abs(a) == pytest.approx(1.0, abs=1e-15)


def test_rt_amplitudes_direct_formula():
    end = WaveState(-1.0, 1.0, 0.0)
    a, b, ratio = rt_amplitudes(end, 1.0, 1.0)
    assert ratio == pytest.approx(0.5, abs=1e-15)
    assert abs(a) == pytest.approx(0.5, abs=1e-15)  # |T| = 2, |R| = 1


def test_rt_amplitudes_full_pipeline_near_first_resonance():
    # the L = 1 box is reflectionless at E = 0.76
    point = scattering_run(PotentialSpec(4, 1.0), 0.76, BoundaryKind.PLANE_WAVE)
    assert point.reflection_magnitude < 5e-3


def test_rt_decomposition_reconstructs_endpoint():
    e, L = 1.1, 1.0
    point = scattering_run(PotentialSpec(4, L), e, BoundaryKind.PLANE_WAVE)
    a, b = point.incident, point.reflected
    end = point.endpoint
    assert abs((a + b) - end.value) < 1e-13 * abs(end.value)
    assert abs(1j * math.sqrt(e) * (a - b) - end.derivative) < 1e-13 * abs(end.derivative)


def test_dminus_pure_right_mover_has_no_reflection():
    spec = PotentialSpec(4, 5.0)
    e = 1.3
    q = q_eval(spec, e, -spec.L)
    root = math.sqrt(q)
    qp = q_prime(spec, -spec.L)  # negative: Q' is odd
    right = WaveState(-spec.L, 1.0, 1j * root - qp / (4.0 * q))
    d_plus, d_minus = dminus_amplitudes(right, spec, e)
    assert abs(d_minus) < 1e-15
    assert d_plus == pytest.approx(1.0, abs=1e-15)


def test_dminus_pure_left_mover_is_all_reflection():
    spec = PotentialSpec(4, 5.0)
    e = 1.3
    q = q_eval(spec, e, -spec.L)
    root = math.sqrt(q)
    qp = q_prime(spec, -spec.L)
    left = WaveState(-spec.L, 1.0, -1j * root - qp / (4.0 * q))
    d_plus, d_minus = dminus_amplitudes(left, spec, e)
    assert abs(d_plus) < 1e-15
    assert d_minus == pytest.approx(1.0, abs=1e-15)


def test_dminus_full_pipeline_near_ground_state():
    # |D-| nearly vanishes at the quartic ground-state energy for L = 5
    point = scattering_run(PotentialSpec(4, 5.0), 1.475, BoundaryKind.WKB)
    assert point.reflection_magnitude < 5e-3


def test_scattering_run_examples():
    p = scattering_run(PotentialSpec(4, 1.0), 7.55, BoundaryKind.PLANE_WAVE)
    assert p.reflection_magnitude < 5e-2
    p = scattering_run(PotentialSpec(4, 2.0), 3.02, BoundaryKind.PLANE_WAVE)
    assert p.reflection_magnitude < 5e-2
    p = scattering_run(PotentialSpec(6, 5.0), 5.2625, BoundaryKind.WKB)
    assert p.reflection_magnitude < 5e-3


def test_scattering_run_rejects_nonpositive_energy():
    with pytest.raises(DomainError):
        scattering_run(PotentialSpec(4, 1.0), 0.0, BoundaryKind.WKB)


@pytest.mark.parametrize("e", [0.7, 2.3, 9.8, 20.0])
def test_unitarity_on_sample_energies(e):
    point = scattering_run(PotentialSpec(4, 1.0), e, BoundaryKind.PLANE_WAVE)
    t_mag = 1.0 / abs(point.incident)
    r_mag = abs(point.reflected) / abs(point.incident)
    assert abs(r_mag**2 + t_mag**2 - 1.0) < 1e-8


@pytest.mark.parametrize("e", [0.5, 3.7, 14.2, 30.0])
def test_zero_potential_is_reflectionless(e):
    point = scattering_run(PotentialSpec(4, 1.0), e, BoundaryKind.PLANE_WAVE, zero_potential=True)
    assert point.reflection_magnitude < 1e-9


def test_wkb_self_consistency_right_mover_from_bc_form():
    # feeding dminus the boundary-condition waveform itself (translated to -L
    # with the odd derivative sign) must return a pure incident wave
    spec = PotentialSpec(8, 5.0)
    e = 2.0
    q = q_eval(spec, e, -spec.L)
    state = WaveState(-spec.L, 1.0, 1j * math.sqrt(q) - q_prime(spec, -spec.L) / (4.0 * q))
    d_plus, d_minus = dminus_amplitudes(state, spec, e)
    assert abs(d_minus) < 1e-14
