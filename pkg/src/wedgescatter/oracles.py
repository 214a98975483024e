"""Bound-state energies of the upside-down wells, independent of scattering.

Two routes cross-check each other:

* Real-line route (m = 4 only): the -x^4 well shares its spectrum with the
  right-side-up partner well 4 x^4 - 2 x (the equivalence map rescales the
  kinetic term; the operator with the correct spectrum is
  -psi'' + (4 x^4 - 2 x) psi = E psi).  The lowest levels come from finite
  differences on [-a, a] with Dirichlet walls, Sturm-sequence bisection of
  the tridiagonal matrix, and Richardson extrapolation in the mesh.

* Complex-ray route (any even m): the recessive semiclassical solution
  phi ~ Q^(-1/4) exp(-i int sqrt(Q)) is seeded at the tip of each decay-wedge
  center ray and integrated straight to the origin; the two solutions are
  linearly dependent exactly at an eigenvalue, detected as a zero of their
  scale-normalized Wronskian.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _kernels
from ._minimize import golden_minimize
from ._parallel import ordered_map
from .errors import (
    DomainError,
    DomainSizeError,
    InstabilityError,
    InsufficientRangeError,
    OverflowIntegrationError,
)
from .potential import PotentialSpec, q_eval, q_prime, stokes_wedges
from .propagator import StepControl, WaveState, propagate_scaled
from .scan import energy_grid

CONTOUR_CONTROL = StepControl(rtol=1e-12, atol=1e-14)


class EigenMethod(enum.Enum):
    HERMITIAN_PARTNER = "hermitian"
    CONTOUR_SHOOTING = "contour"


@dataclass(frozen=True)
class EigenResult:
    method: EigenMethod
    m: int
    energies: tuple[float, ...]
    diagnostics: tuple[float, ...]

    def __post_init__(self):
        if any(e <= 0.0 for e in self.energies):
            raise DomainError("eigenvalues must be positive")
        if any(b <= a for a, b in zip(self.energies, self.energies[1:])):
            raise DomainError("eigenvalues must be strictly increasing")


@dataclass(frozen=True)
class ContourConfig:
    """Ray layout and default search grid for the complex-ray route.

    ``ray_angles`` of None means the wedge center rays; the matching point is
    always the origin.  The tip radius must dominate the energy,
    r0^m >= 100 * E, for the semiclassical seed to be trustworthy.
    """

    r0: float = 7.0
    ray_angles: tuple[float, float] | None = None
    e_min: float = 0.5
    e_max: float = 13.0
    de: float = 0.05

    def __post_init__(self):
        if self.r0 <= 0.0:
            raise DomainError("ray radius must be positive")


def dirichlet_eigenvalues(
    potential: Callable[[np.ndarray], np.ndarray],
    count: int,
    half_width: float,
    mesh_points: int,
    kinetic_coeff: float = 1.0,
    bisect_tol: float = 1e-11,
) -> tuple[list[float], list[float]]:
    """Lowest eigenvalues of -c psi'' + V psi = E psi with psi(+-a) = 0.

    Central differences on a uniform mesh give a symmetric tridiagonal
    matrix whose eigenvalues are isolated by Sturm-sequence bisection.
    Returns (eigenvalues, final bracket widths).
    """
    if count < 1:
        raise DomainError("need count >= 1")
    h = 2.0 * half_width / mesh_points
    x = -half_width + h * np.arange(1, mesh_points)
    diag = 2.0 * kinetic_coeff / h**2 + potential(x)
    off = kinetic_coeff / h**2
    esq = off * off

    lo0 = float(np.min(diag)) - 2.0 * off
    values = []
    widths = []
    for k in range(count):
        lo = lo0
        hi = max(1.0, lo + 1.0)
        while _kernels.sturm_count(diag, esq, hi) < k + 1:
            hi = lo0 + 2.0 * (hi - lo0)
        while hi - lo > bisect_tol:
            mid = 0.5 * (lo + hi)
            if _kernels.sturm_count(diag, esq, mid) < k + 1:
                lo = mid
            else:
                hi = mid
        values.append(0.5 * (lo + hi))
        widths.append(hi - lo)
    return values, widths


def _partner_potential(x: np.ndarray) -> np.ndarray:
    return 4.0 * x**4 - 2.0 * x


def hermitian_partner_eigen(
    count: int, half_width: float = 6.0, mesh_points: int = 4000
) -> EigenResult:
    """Quartic-well spectrum via the isospectral Hermitian partner well.

    Solves -psi'' + (4 x^4 - 2 x) psi = E psi on two meshes (N and 2N) and
    Richardson-extrapolates the O(h^2) discretization error away.
    """
    coarse, _ = dirichlet_eigenvalues(
        _partner_potential, count, half_width, mesh_points, kinetic_coeff=1.0
    )
    fine, widths = dirichlet_eigenvalues(
        _partner_potential, count, half_width, 2 * mesh_points, kinetic_coeff=1.0
    )
    energies = [(4.0 * f - c) / 3.0 for c, f in zip(coarse, fine)]
    wall = min(_partner_potential(np.array([half_width, -half_width])))
    if wall < 10.0 * energies[-1]:
        raise DomainSizeError(
            f"box wall {wall:.1f} is below 10x the top requested level {energies[-1]:.3f};"
            " enlarge half_width"
        )
    return EigenResult(
        method=EigenMethod.HERMITIAN_PARTNER,
        m=4,
        energies=tuple(energies),
        diagnostics=tuple(widths),
    )


def _ray_seed(spec: PotentialSpec, e: float, r0: float, angle: float) -> WaveState:
    """Recessive semiclassical state at the ray tip (scale dropped).

    The logarithmic derivative of Q^(-1/4) exp(-i int sqrt(Q) dx) is
    -i sqrt(Q) - Q'/(4Q); principal branches stay smooth along both center
    rays because Im Q never crosses the negative real axis there.
    """
    tip = r0 * cmath.exp(1j * angle)
    q = q_eval(spec, e, tip)
    qp = q_prime(spec, tip)
    return WaveState(tip, 1.0 + 0.0j, -1j * cmath.sqrt(q) - qp / (4.0 * q))


def contour_wronskian(
    spec: PotentialSpec,
    e: float,
    cfg: ContourConfig = ContourConfig(),
    ctrl: StepControl = CONTOUR_CONTROL,
) -> complex:
    """Scale-normalized Wronskian of the two recessive ray solutions at x = 0.

    Vanishes exactly at the bound-state energies.  Each solution is
    propagated with power-of-two rescaling; the binary exponents cancel in
    the normalization, so the result is well-defined even where the raw
    states overflow float64.
    """
    if cfg.r0**spec.m < 100.0 * abs(e):
        raise DomainError(
            f"ray radius {cfg.r0} too small for E = {e}: need r0^m >= 100 E"
        )
    angles = cfg.ray_angles if cfg.ray_angles is not None else stokes_wedges(spec).center_rays
    states = []
    for angle in angles:
        seed = _ray_seed(spec, e, cfg.r0, angle)
        try:
            state, _ = propagate_scaled(seed, e, spec, 0j, ctrl)
        except OverflowIntegrationError as exc:
            raise InstabilityError(f"ray integration blew up at angle {angle}: {exc}") from exc
        states.append(state)
    right, left = states
    w = left.value * right.derivative - left.derivative * right.value
    norm_l = math.hypot(abs(left.value), abs(left.derivative))
    norm_r = math.hypot(abs(right.value), abs(right.derivative))
    return w / (norm_l * norm_r)


def contour_eigenvalues(
    spec: PotentialSpec,
    e_min: float | None = None,
    e_max: float | None = None,
    de: float | None = None,
    count: int = 3,
    cfg: ContourConfig = ContourConfig(),
    ctrl: StepControl = CONTOUR_CONTROL,
    *,
    threads: int | None = None,
    residual_factor: float = 1e-4,
) -> EigenResult:
    """Scan |W(E)|, bracket every strict local minimum, golden-refine to 1e-8.

    |W| sweeps over orders of magnitude across the grid, so depth is judged
    per bracket: a refined minimum counts as an eigenvalue only if its
    residual undercuts the bracket endpoints by ``residual_factor`` (genuine
    zeros plunge ~7 orders below their bracket; the shallow dips of |W|
    between levels stay comparable to theirs).
    """
    e_min = cfg.e_min if e_min is None else e_min
    e_max = cfg.e_max if e_max is None else e_max
    de = cfg.de if de is None else de
    if not (0.0 < e_min < e_max):
        raise DomainError(f"need 0 < e_min < e_max, got ({e_min}, {e_max})")
    if cfg.r0**spec.m < 100.0 * e_max:
        raise DomainError(
            f"ray radius {cfg.r0} too small for E up to {e_max}: need r0^m >= 100 E_max"
        )

    grid = energy_grid(e_min, e_max, de)
    mags = ordered_map(lambda e: abs(contour_wronskian(spec, e, cfg, ctrl)), grid, threads)

    found = []
    for i in range(1, len(grid) - 1):
        if mags[i] < mags[i - 1] and mags[i] < mags[i + 1]:
            energy, residual = golden_minimize(
                lambda e: abs(contour_wronskian(spec, e, cfg, ctrl)),
                grid[i - 1],
                grid[i + 1],
                1e-8,
            )
            if residual < residual_factor * min(mags[i - 1], mags[i + 1]):
                found.append((energy, residual))
    if len(found) < count:
        raise InsufficientRangeError(
            f"found {len(found)} eigenvalues in [{e_min}, {e_max}], needed {count}"
        )
    found.sort()
    return EigenResult(
        method=EigenMethod.CONTOUR_SHOOTING,
        m=spec.m,
        energies=tuple(e for e, _ in found[:count]),
        diagnostics=tuple(r for _, r in found[:count]),
    )
