"""Stationary scattering off the cut-off well under two boundary protocols.

Plane-wave protocol: a unit right-going transmitted wave is imposed at x = L,
the equation is integrated down to x = -L, and the endpoint is decomposed
into incident/reflected plane waves, giving |R/T| = |B| with

    B = (y(-L) + i y'(-L) / sqrt(E)) / 2,
    A = (y(-L) - i y'(-L) / sqrt(E)) / 2        (|T| = 1/|A|, |R| = |B|/|A|).

Semiclassical protocol: the right-going wave of the phase function
Q(x) = E + x^m is imposed at x = L (value 1, slope i sqrt(Q) - Q'/(4Q), both
at L), and the endpoint at -L is decomposed into the corresponding right/left
movers normalized at -L, whose coefficients solve

    phi(-L)  = D- + D+,
    phi'(-L) = D- (-i sqrt(Q) - Q'/(4Q)) + D+ (i sqrt(Q) - Q'/(4Q)),

with Q and Q' evaluated at -L, where Q(-L) = Q(L) but Q'(-L) = -Q'(L)
because Q' is odd.  Flipping that derivative sign is what makes |D-| vanish
identically on a pure right-mover; evaluating Q' at +L instead leaves a
floor of order Q'/(4 Q^(3/2)) under every zero and displaces the minima.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError
from .potential import PotentialSpec, q_eval, q_prime
from .propagator import DEFAULT_CONTROL, StepControl, WaveState, propagate


class BoundaryKind(enum.Enum):
    PLANE_WAVE = "plane"
    WKB = "wkb"


@dataclass(frozen=True)
class ScatterPoint:
    """Amplitudes extracted at x = -L for one energy.

    ``incident`` and ``reflected`` are the complex coefficients (A, B) in the
    plane-wave protocol or (D+, D-) in the semiclassical one; the reflection
    observable plotted throughout is ``reflection_magnitude = |reflected|``.
    Failed grid points carry an ``error`` message and NaN magnitudes.
    """

    e: float
    bc: BoundaryKind
    incident: complex
    reflected: complex
    endpoint: WaveState | None
    error: str | None = None

    @property
    def incident_magnitude(self) -> float:
        return abs(self.incident)

    @property
    def reflected_magnitude(self) -> float:
        return abs(self.reflected)

    @property
    def reflection_magnitude(self) -> float:
        return abs(self.reflected)

    @property
    def ok(self) -> bool:
        return self.error is None


def plane_wave_bc(e: float, L: float) -> WaveState:
    """Outgoing unit plane wave at x = L: (1, i sqrt(E))."""
    if e <= 0.0:
        raise DomainError(f"plane-wave boundary needs E > 0, got {e}")
    return WaveState(L, 1.0 + 0.0j, 1j * math.sqrt(e))


def wkb_bc(spec: PotentialSpec, e: float) -> WaveState:
    """Right-going semiclassical wave at x = L: (1, i sqrt(Q(L)) - Q'(L)/(4 Q(L)))."""
    q = q_eval(spec, e, spec.L)
    if q <= 0.0:
        raise DomainError(f"Q(L) must be positive, got {q}")
    qp = q_prime(spec, spec.L)
    return WaveState(spec.L, 1.0 + 0.0j, 1j * math.sqrt(q) - qp / (4.0 * q))


def rt_amplitudes(end: WaveState, e: float, L: float) -> tuple[complex, complex, float]:
    """Decompose the integrated state at x = -L into (A, B, |R/T|)."""
    if float(complex(end.x).real) != -L or complex(end.x).imag != 0.0:
        raise DomainError(f"endpoint must sit at x = -L = {-L}, got {end.x!r}")
    if e <= 0.0:
        raise DomainError(f"plane-wave decomposition needs E > 0, got {e}")
    root = math.sqrt(e)
    a = 0.5 * (end.value - 1j * end.derivative / root)
    b = 0.5 * (end.value + 1j * end.derivative / root)
    return a, b, abs(b)


def dminus_amplitudes(end: WaveState, spec: PotentialSpec, e: float) -> tuple[complex, complex]:
    """Decompose the integrated state at x = -L into (D+, D-).

    Solves the 2x2 mover system with the prefactor slope taken at the
    decomposition point, ratio = Q'(-L) / (4 Q(-L)^(3/2)) (a negative
    number): D-/+ = ((1 +/- i ratio) phi +/- i phi'/sqrt(Q)) / 2.
    """
    if float(complex(end.x).real) != -spec.L or complex(end.x).imag != 0.0:
        raise DomainError(f"endpoint must sit at x = -L = {-spec.L}, got {end.x!r}")
    q = q_eval(spec, e, -spec.L)
    if q <= 0.0:
        raise DomainError(f"Q(-L) must be positive, got {q}")
    root = math.sqrt(q)
    ratio = q_prime(spec, -spec.L) / (4.0 * q * root)
    d_plus = 0.5 * ((1.0 - 1j * ratio) * end.value - 1j * end.derivative / root)
    d_minus = 0.5 * ((1.0 + 1j * ratio) * end.value + 1j * end.derivative / root)
    return d_plus, d_minus


def scattering_run(
    spec: PotentialSpec,
    e: float,
    bc: BoundaryKind,
    ctrl: StepControl = DEFAULT_CONTROL,
    *,
    zero_potential: bool = False,
) -> ScatterPoint:
    """Impose the boundary state at x = L, integrate to -L, extract amplitudes."""
    if e <= 0.0:
        raise DomainError(f"scattering runs need E > 0, got {e}")
    if bc is BoundaryKind.PLANE_WAVE:
        start = plane_wave_bc(e, spec.L)
    else:
        start = wkb_bc(spec, e)
    end = propagate(start, e, spec, -spec.L, ctrl, zero_potential=zero_potential)
    if bc is BoundaryKind.PLANE_WAVE:
        incident, reflected, _ = rt_amplitudes(end, e, spec.L)
    else:
        incident, reflected = dminus_amplitudes(end, spec, e)
    return ScatterPoint(e=e, bc=bc, incident=incident, reflected=reflected, endpoint=end)
