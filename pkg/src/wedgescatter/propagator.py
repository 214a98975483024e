"""Integration of phi'' = (V(x) - E) phi along real or complex straight paths.

Real endpoints select the cut-off potential of the box (free outside
|x| > L, -x^m inside), with the path split at the +/-L discontinuities so no
step straddles them.  If either endpoint is a complex number the segment is
integrated with the uncut monomial well, phi'' = -(E + x^m) phi, which is the
mode the complex-ray eigenvalue oracle uses.

The state is the complex pair (value, derivative) at a coordinate; the
propagator refuses to emit non-finite states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .errors import DomainError, IntegrationError, OverflowIntegrationError
from .potential import PotentialSpec


@dataclass(frozen=True)
class WaveState:
    """Wavefunction value and derivative at one coordinate."""

    x: float | complex
    value: complex
    derivative: complex

    def __post_init__(self):
        for part in (self.value, self.derivative):
            z = complex(part)
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise DomainError(f"non-finite wave state component: {part!r}")


@dataclass(frozen=True)
class StepControl:
    """Adaptive step-size settings for the embedded 5(4) integrator."""

    rtol: float = 1e-10
    atol: float = 1e-12
    max_steps: int = 10_000_000
    initial_step: float = 1e-3

    def __post_init__(self):
        if self.rtol <= 0.0 or self.atol <= 0.0:
            raise DomainError("tolerances must be positive")
        if self.max_steps <= 0:
            raise DomainError("max_steps must be positive")
        if self.initial_step <= 0.0:
            raise DomainError("initial_step must be positive")


DEFAULT_CONTROL = StepControl()


def wronskian(a: WaveState, b: WaveState) -> complex:
    """a.value * b.derivative - a.derivative * b.value; requires a.x == b.x."""
    if complex(a.x) != complex(b.x):
        raise DomainError(f"wronskian needs matching coordinates, got {a.x!r} and {b.x!r}")
    return a.value * b.derivative - a.derivative * b.value


def _is_contour(x) -> bool:
    return isinstance(x, complex) or getattr(x, "imag", 0.0) != 0.0


def _segments(start_x, x_to, spec: PotentialSpec, zero_potential: bool):
    """Split the path into (z0, u, length, well) pieces, one potential region each."""
    if _is_contour(start_x) or _is_contour(x_to):
        z0 = complex(start_x)
        z1 = complex(x_to)
        length = abs(z1 - z0)
        u = (z1 - z0) / length
        return [(z0, u, length, not zero_potential)]

    a = float(start_x)
    b = float(x_to)
    cuts = [c for c in (-spec.L, spec.L) if min(a, b) < c < max(a, b)]
    points = [a] + sorted(cuts, reverse=a > b) + [b]
    u = 1.0 if b > a else -1.0
    segs = []
    for p0, p1 in zip(points[:-1], points[1:]):
        inside = abs(0.5 * (p0 + p1)) <= spec.L
        segs.append((complex(p0), complex(u), abs(p1 - p0), inside and not zero_potential))
    return segs


def propagate_scaled(
    start: WaveState,
    e: float,
    spec: PotentialSpec,
    x_to: float | complex,
    ctrl: StepControl = DEFAULT_CONTROL,
    *,
    zero_potential: bool = False,
) -> tuple[WaveState, int]:
    """Propagate and return (scaled state, binary exponent).

    The true endpoint state is the returned state times 2**exponent.  This
    form never overflows and is what the contour oracle consumes, since its
    Wronskian normalization cancels the exponents.
    """
    if complex(start.x) == complex(x_to):
        raise DomainError("propagation endpoints must differ")

    half_m = spec.m // 2
    phi = complex(start.value)
    exp2 = 0
    budget = ctrl.max_steps
    segs = _segments(start.x, x_to, spec, zero_potential)
    dphi_dx = complex(start.derivative)
    for z0, u, length, well in segs:
        w = dphi_dx * u
        phi, w, seg_exp2, status, used, s_reached = _kernels.dopri5_segment(
            z0, u, length, float(e), half_m, well, phi, w,
            ctrl.rtol, ctrl.atol, ctrl.initial_step, budget, True,
        )
        exp2 += seg_exp2
        budget -= used
        if status == _kernels.STATUS_NONFINITE:
            raise OverflowIntegrationError(
                f"state became non-finite near x={z0 + s_reached * u}", z0 + s_reached * u
            )
        if status in (_kernels.STATUS_MAX_STEPS, _kernels.STATUS_UNDERFLOW):
            raise IntegrationError(
                f"integration stalled at x={z0 + s_reached * u} "
                f"({ctrl.max_steps - budget} steps used)",
                z0 + s_reached * u,
            )
        dphi_dx = w / u
    return WaveState(x_to, phi, dphi_dx), exp2


def propagate(
    start: WaveState,
    e: float,
    spec: PotentialSpec,
    x_to: float | complex,
    ctrl: StepControl = DEFAULT_CONTROL,
    *,
    zero_potential: bool = False,
) -> WaveState:
    """Propagate the state to ``x_to``; raises if the result overflows float64."""
    state, exp2 = propagate_scaled(start, e, spec, x_to, ctrl, zero_potential=zero_potential)
    if exp2 == 0:
        return state
    try:
        value = complex(math.ldexp(state.value.real, exp2), math.ldexp(state.value.imag, exp2))
        deriv = complex(
            math.ldexp(state.derivative.real, exp2), math.ldexp(state.derivative.imag, exp2)
        )
    except OverflowError as exc:
        raise OverflowIntegrationError(
            f"endpoint state exceeds float64 range (binary exponent {exp2})", x_to
        ) from exc
    return WaveState(x_to, value, deriv)


def propagate_fixed_rk4(
    start: WaveState,
    e: float,
    spec: PotentialSpec,
    x_to: float | complex,
    step: float,
    *,
    zero_potential: bool = False,
) -> WaveState:
    """Fixed-step classical RK4 reference propagation (for cross-checks)."""
    if step <= 0.0:
        raise DomainError("step must be positive")
    if complex(start.x) == complex(x_to):
        raise DomainError("propagation endpoints must differ")
    half_m = spec.m // 2
    phi = complex(start.value)
    dphi_dx = complex(start.derivative)
    for z0, u, length, well in _segments(start.x, x_to, spec, zero_potential):
        n = max(1, int(math.ceil(length / step)))
        w = dphi_dx * u
        phi, w = _kernels.rk4_segment(z0, u, length, float(e), half_m, well, phi, w, n)
        dphi_dx = w / u
    return WaveState(x_to, phi, dphi_dx)
