"""Cut-off upside-down monomial wells and their complex-plane wedge geometry.

The well is V(x) = -x^m inside |x| <= L and zero outside, for even m >= 4.
The phase function Q(x) = E + x^m drives both the scattering boundary
conditions and the complex-ray eigenvalue search; the decay sectors of the
eigenfunctions are PT-symmetric wedges of opening 2*pi/(m+2) just below the
real axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

SUPPORTED_POWERS = (4, 6, 8)


@dataclass(frozen=True)
class PotentialSpec:
    """A -x^m well truncated to the box |x| <= L.

    ``m`` must be even and >= 4 (validated presets: 4, 6, 8, but any even
    power is accepted); ``L`` is the half-width of the box.
    """

    m: int
    L: float

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 4 or self.m % 2 != 0:
            raise DomainError(f"potential power must be an even integer >= 4, got {self.m!r}")
        if not (self.L > 0.0):
            raise DomainError(f"cutoff must be positive, got {self.L!r}")

    def v(self, x: float) -> float:
        """Piecewise potential: -x^m inside the box, 0 outside."""
        return -(x**self.m) if abs(x) <= self.L else 0.0


def q_eval(spec: PotentialSpec, e: float, x: float | complex) -> float | complex:
    """Phase function Q(x) = E + x^m; accepts complex x for contour work."""
    return e + x**spec.m


def q_prime(spec: PotentialSpec, x: float | complex) -> float | complex:
    """dQ/dx = m * x^(m-1)."""
    return spec.m * x ** (spec.m - 1)


@dataclass(frozen=True)
class WedgeGeometry:
    """Decay-wedge layout for a given well power.

    Angles are kept as exact rational multiples of pi (``Fraction`` fields,
    units of pi) so symmetry checks stay exact; the float properties realize
    them in radians.  The right wedge hugs the positive real axis from below,
    the left wedge is its mirror image about the imaginary axis.
    """

    opening_pi: Fraction
    right_wedge_pi: tuple[Fraction, Fraction]
    left_wedge_pi: tuple[Fraction, Fraction]
    center_rays_pi: tuple[Fraction, Fraction]
    exponent_order: int
    prefactor_power: Fraction

    @property
    def opening(self) -> float:
        return float(self.opening_pi) * math.pi

    @property
    def right_wedge(self) -> tuple[float, float]:
        lo, hi = self.right_wedge_pi
        return (float(lo) * math.pi, float(hi) * math.pi)

    @property
    def left_wedge(self) -> tuple[float, float]:
        lo, hi = self.left_wedge_pi
        return (float(lo) * math.pi, float(hi) * math.pi)

    @property
    def center_rays(self) -> tuple[float, float]:
        right, left = self.center_rays_pi
        return (float(right) * math.pi, float(left) * math.pi)


def stokes_wedges(spec: PotentialSpec) -> WedgeGeometry:
    """Wedge geometry for the -x^m well.

    Opening angle 2*pi/(m+2); the right wedge occupies (-opening, 0), the
    left wedge (-pi, -pi + opening).  Eigenfunctions decay like
    exp(-|x|^p / p) with p = (m+2)/2, times an algebraic factor |x|^(-m/4).
    """
    m = spec.m
    opening = Fraction(2, m + 2)
    right = (-opening, Fraction(0))
    left = (Fraction(-1), Fraction(-1) + opening)
    centers = (-opening / 2, Fraction(-1) + opening / 2)
    return WedgeGeometry(
        opening_pi=opening,
        right_wedge_pi=right,
        left_wedge_pi=left,
        center_rays_pi=centers,
        exponent_order=(m + 2) // 2,
        prefactor_power=Fraction(m, 4),
    )
