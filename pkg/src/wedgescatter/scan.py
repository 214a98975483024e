"""Energy scans of the reflection magnitude and refinement of its zeros.

A scan evaluates the chosen reflection observable on a uniform energy grid;
reflectionless candidates show up as deep strict local minima (the
observables are nonnegative, so zero crossings are located by minimizing the
magnitude, not by sign changes).  Candidate brackets are refined by
golden-section search and finally annotated with the nearest independently
computed bound-state energy, if one lies within the matching window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from statistics import median

from ._minimize import golden_minimize
from ._parallel import ordered_map
from .errors import DomainError, RefinementError, WedgescatterError
from .potential import PotentialSpec
from .propagator import DEFAULT_CONTROL, StepControl
from .scattering import BoundaryKind, ScatterPoint, scattering_run


@dataclass(frozen=True)
class ScanSeries:
    """Ordered reflection samples over a strictly increasing energy grid."""

    spec: PotentialSpec
    bc: BoundaryKind
    points: tuple[ScatterPoint, ...]

    def __post_init__(self):
        if not self.points:
            raise DomainError("scan series must contain at least one point")
        energies = [p.e for p in self.points]
        if any(b <= a for a, b in zip(energies, energies[1:])):
            raise DomainError("scan energies must be strictly increasing")
        if any(p.bc is not self.bc for p in self.points):
            raise DomainError("all scan points must share the series boundary kind")

    @property
    def energies(self) -> list[float]:
        return [p.e for p in self.points]

    @property
    def magnitudes(self) -> list[float]:
        return [p.reflection_magnitude if p.ok else math.nan for p in self.points]


@dataclass(frozen=True)
class ReflectionZero:
    """A refined reflectionless energy with its bracket and residual depth."""

    energy: float
    residual: float
    bracket: tuple[float, float]
    matched_eigenvalue: float | None = None
    oracle: str | None = None

    def __post_init__(self):
        lo, hi = self.bracket
        if not (lo < self.energy < hi):
            raise DomainError(f"refined energy {self.energy} outside bracket ({lo}, {hi})")


def energy_grid(e_min: float, e_max: float, de: float) -> list[float]:
    """Uniform grid e_min, e_min + de, ... up to e_max (inclusive within 1e-9 de)."""
    if not (0.0 < e_min < e_max):
        raise DomainError(f"need 0 < e_min < e_max, got ({e_min}, {e_max})")
    if de <= 0.0:
        raise DomainError(f"grid step must be positive, got {de}")
    n = int(math.floor((e_max - e_min) / de + 1e-9)) + 1
    return [e_min + i * de for i in range(n)]


def scan_energies(
    spec: PotentialSpec,
    bc: BoundaryKind,
    e_min: float,
    e_max: float,
    de: float,
    ctrl: StepControl = DEFAULT_CONTROL,
    *,
    zero_potential: bool = False,
    threads: int | None = None,
) -> ScanSeries:
    """One ScatterPoint per grid energy; integration failures flag the point."""

    def one(e: float) -> ScatterPoint:
        try:
            return scattering_run(spec, e, bc, ctrl, zero_potential=zero_potential)
        except WedgescatterError as exc:
            return ScatterPoint(
                e=e,
                bc=bc,
                incident=complex(math.nan, math.nan),
                reflected=complex(math.nan, math.nan),
                endpoint=None,
                error=str(exc),
            )

    points = ordered_map(one, energy_grid(e_min, e_max, de), threads)
    return ScanSeries(spec=spec, bc=bc, points=tuple(points))


def locate_minima(series: ScanSeries, depth_factor: float = 0.2) -> list[tuple[float, float]]:
    """Brackets around interior strict local minima deeper than depth_factor * median."""
    if len(series.points) < 3:
        raise DomainError("need at least 3 scan points to bracket minima")
    mags = series.magnitudes
    finite = [m for m in mags if not math.isnan(m)]
    if not finite:
        return []
    threshold = depth_factor * median(finite)
    brackets = []
    for i in range(1, len(mags) - 1):
        left, mid, right = mags[i - 1], mags[i], mags[i + 1]
        if math.isnan(left) or math.isnan(mid) or math.isnan(right):
            continue
        if mid < left and mid < right and mid < threshold:
            brackets.append((series.points[i - 1].e, series.points[i + 1].e))
    return brackets


def refine_zero(
    spec: PotentialSpec,
    bc: BoundaryKind,
    bracket: tuple[float, float],
    ctrl: StepControl = DEFAULT_CONTROL,
    e_tol: float = 1e-6,
    *,
    zero_potential: bool = False,
) -> ReflectionZero:
    """Golden-section minimization of the reflection magnitude over the bracket."""

    def magnitude(e: float) -> float:
        return scattering_run(
            spec, e, bc, ctrl, zero_potential=zero_potential
        ).reflection_magnitude

    lo, hi = bracket
    energy, residual = golden_minimize(magnitude, lo, hi, e_tol, check_unimodal=True)
    return ReflectionZero(energy=energy, residual=residual, bracket=(lo, hi))


def match_eigenvalues(
    zeros: list[ReflectionZero],
    oracle_energies: list[float],
    window: float = 0.1,
    source: str = "oracle",
) -> list[ReflectionZero]:
    """Annotate each zero with the nearest oracle energy within the window."""
    if any(b < a for a, b in zip(oracle_energies, oracle_energies[1:])):
        raise DomainError("oracle energies must be sorted")
    annotated = []
    for zero in zeros:
        if oracle_energies:
            nearest = min(oracle_energies, key=lambda ev: abs(ev - zero.energy))
            if abs(nearest - zero.energy) <= window:
                annotated.append(replace(zero, matched_eigenvalue=nearest, oracle=source))
                continue
        annotated.append(replace(zero, matched_eigenvalue=None, oracle=None))
    return annotated


def refine_series_zeros(
    series: ScanSeries,
    ctrl: StepControl = DEFAULT_CONTROL,
    e_tol: float = 1e-6,
    depth_factor: float = 0.2,
    *,
    zero_potential: bool = False,
) -> list[ReflectionZero]:
    """Bracket and refine every qualifying minimum of a scan, skipping bad brackets."""
    zeros = []
    for bracket in locate_minima(series, depth_factor):
        try:
            zeros.append(
                refine_zero(
                    series.spec, series.bc, bracket, ctrl, e_tol, zero_potential=zero_potential
                )
            )
        except RefinementError:
            continue
    return zeros
