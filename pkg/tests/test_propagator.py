import cmath
import math

import pytest

from wedgescatter import (
    DomainError,
    IntegrationError,
    PotentialSpec,
    StepControl,
    WaveState,
    propagate,
    propagate_fixed_rk4,
    wronskian,
)

SPEC41 = PotentialSpec(4, 1.0)


def test_free_plane_wave_region_three():
    # V = 0 for x > L, so the outgoing wave stays a pure exponential
    e = 2.0
    start = WaveState(1.0, 1.0, 1j * math.sqrt(e))
    out = propagate(start, e, SPEC41, 4.0)
    exact = cmath.exp(1j * math.sqrt(e) * 3.0)
    assert abs(out.value - exact) < 1e-9
    assert abs(out.derivative - 1j * math.sqrt(e) * exact) < 1e-9


def test_constant_well_closed_form():
    # phi'' = -(E + c) phi outside the box equals free motion at energy E + c
    e, c = 1.3, 2.2
    start = WaveState(2.0, 1.0, 1j * math.sqrt(e + c))
    out = propagate(start, e + c, SPEC41, 5.0)
    exact = cmath.exp(1j * math.sqrt(e + c) * 3.0)
    assert abs(out.value - exact) < 1e-9


def test_adaptive_matches_fixed_step_reference():
    # brute-force fixed-step RK4 at h = 1e-6 as the independent oracle
    e = 1.0
    start = WaveState(1.0, 1.0, 1j * math.sqrt(e))
    adaptive = propagate(start, e, SPEC41, -1.0)
    reference = propagate_fixed_rk4(start, e, SPEC41, -1.0, 1e-6)
    assert abs(adaptive.value - reference.value) < 1e-8
    assert abs(adaptive.derivative - reference.derivative) < 1e-8


def test_wronskian_canonical_basis():
    a = WaveState(0.5, 1.0, 0.0)
    b = WaveState(0.5, 0.0, 1.0)
    assert wronskian(a, b) == 1.0


def test_wronskian_antisymmetry_and_formula():
    a = WaveState(0.5, 2.0, 3j)
    assert wronskian(a, a) == 0.0
    b = WaveState(0.5, 1.0, 1j)
    assert wronskian(a, b) == 2j - 3j


def test_wronskian_coordinate_mismatch():
    with pytest.raises(DomainError):
        wronskian(WaveState(0.0, 1.0, 0.0), WaveState(0.5, 1.0, 0.0))


def test_wronskian_conserved_along_path():
    e = 2.0
    a0 = WaveState(1.0, 1.0, 0.3 + 0.2j)
    b0 = WaveState(1.0, 0.1 - 0.5j, 1.0)
    a1 = propagate(a0, e, SPEC41, -1.0)
    b1 = propagate(b0, e, SPEC41, -1.0)
    w0 = wronskian(a0, b0)
    w1 = wronskian(a1, b1)
    assert abs(w1 - w0) / abs(w0) < 1e-9


def test_propagation_reversible():
    e = 3.0
    start = WaveState(1.0, 0.7 + 0.1j, -0.2 + 1.1j)
    there = propagate(start, e, SPEC41, -1.0)
    back = propagate(there, e, SPEC41, 1.0)
    assert abs(back.value - start.value) < 1e-9
    assert abs(back.derivative - start.derivative) < 1e-9


def test_reversible_on_short_complex_segment():
    e = 1.5
    tip = 2.0 * cmath.exp(-1j * math.pi / 6)
    start = WaveState(tip, 1.0, 0.0)
    there = propagate(start, e, SPEC41, 0j)
    back = propagate(there, e, SPEC41, tip)
    assert abs(back.value - start.value) < 1e-8


def test_tolerance_monotonicity():
    e = 2.5
    start = WaveState(1.0, 1.0, 1j * math.sqrt(e))
    loose = propagate(start, e, SPEC41, -1.0, StepControl(rtol=1e-6, atol=1e-8))
    tight = propagate(start, e, SPEC41, -1.0, StepControl(rtol=1e-8, atol=1e-10))
    assert abs(loose.value - tight.value) / abs(tight.value) < 1e-6


def test_linearity():
    e = 2.0
    s1 = WaveState(1.0, 1.0, 0.5j)
    s2 = WaveState(1.0, -0.3j, 1.0)
    alpha, beta = 0.7 - 0.2j, 1.3 + 0.4j
    combo = WaveState(
        1.0,
        alpha * s1.value + beta * s2.value,
        alpha * s1.derivative + beta * s2.derivative,
    )
    p1 = propagate(s1, e, SPEC41, -1.0)
    p2 = propagate(s2, e, SPEC41, -1.0)
    pc = propagate(combo, e, SPEC41, -1.0)
    expect = alpha * p1.value + beta * p2.value
    assert abs(pc.value - expect) < 1e-9 * max(1.0, abs(expect))


def test_deterministic_repeat():
    e = 1.7
    start = WaveState(1.0, 1.0, 1j * math.sqrt(e))
    first = propagate(start, e, SPEC41, -1.0)
    second = propagate(start, e, SPEC41, -1.0)
    assert first.value == second.value
    assert first.derivative == second.derivative


def test_path_splits_across_box_edges():
    # crossing +L and -L in one call must agree with chained single-region calls
    e = 2.0
    start = WaveState(3.0, 1.0, 1j * math.sqrt(e))
    direct = propagate(start, e, SPEC41, -3.0)
    mid1 = propagate(start, e, SPEC41, 1.0)
    mid2 = propagate(mid1, e, SPEC41, -1.0)
    chained = propagate(mid2, e, SPEC41, -3.0)
    assert abs(direct.value - chained.value) < 1e-9
    assert abs(direct.derivative - chained.derivative) < 1e-9


def test_zero_potential_override():
    e = 2.0
    start = WaveState(1.0, 1.0, 1j * math.sqrt(e))
    out = propagate(start, e, SPEC41, -1.0, zero_potential=True)
    exact = cmath.exp(-1j * math.sqrt(e) * 2.0)
    assert abs(out.value - exact) < 1e-10


def test_step_budget_exhaustion_reports_position():
    e = 100.0
    start = WaveState(1.0, 1.0, 1j * math.sqrt(e))
    with pytest.raises(IntegrationError) as info:
        propagate(start, e, SPEC41, -1.0, StepControl(max_steps=5))
    reached = complex(info.value.furthest_x)
    assert -1.0 <= reached.real <= 1.0


def test_identical_endpoints_rejected():
    with pytest.raises(DomainError):
        propagate(WaveState(1.0, 1.0, 0.0), 1.0, SPEC41, 1.0)


def test_non_finite_state_rejected():
    with pytest.raises(DomainError):
        WaveState(0.0, float("nan"), 0.0)
    with pytest.raises(DomainError):
        WaveState(0.0, 1.0, complex(float("inf"), 0.0))


def test_step_control_validation():
    with pytest.raises(DomainError):
        StepControl(rtol=0.0)
    with pytest.raises(DomainError):
        StepControl(max_steps=0)
    with pytest.raises(DomainError):
        StepControl(initial_step=-1.0)
