"""Numerical scattering laboratory for cut-off upside-down monomial wells.

Locates the energies at which the truncated -x^4 / -x^6 / -x^8 wells scatter
without reflection, under plain plane-wave boundary conditions and under
semiclassical (box-size-dependent) ones, and cross-checks the latter zeros
against two independent bound-state oracles.
"""

from .errors import (
    DomainError,
    DomainSizeError,
    InstabilityError,
    InsufficientRangeError,
    IntegrationError,
    OverflowIntegrationError,
    RefinementError,
    WedgescatterError,
)
from .oracles import (
    CONTOUR_CONTROL,
    ContourConfig,
    EigenMethod,
    EigenResult,
    contour_eigenvalues,
    contour_wronskian,
    dirichlet_eigenvalues,
    hermitian_partner_eigen,
)
from .potential import PotentialSpec, WedgeGeometry, q_eval, q_prime, stokes_wedges
from .propagator import (
    DEFAULT_CONTROL,
    StepControl,
    WaveState,
    propagate,
    propagate_fixed_rk4,
    propagate_scaled,
    wronskian,
)
from .scan import (
    ReflectionZero,
    ScanSeries,
    energy_grid,
    locate_minima,
    match_eigenvalues,
    refine_series_zeros,
    refine_zero,
    scan_energies,
)
from .scattering import (
    BoundaryKind,
    ScatterPoint,
    dminus_amplitudes,
    plane_wave_bc,
    rt_amplitudes,
    scattering_run,
    wkb_bc,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryKind",
    "CONTOUR_CONTROL",
    "ContourConfig",
    "DEFAULT_CONTROL",
    "DomainError",
    "DomainSizeError",
    "EigenMethod",
    "EigenResult",
    "InstabilityError",
    "InsufficientRangeError",
    "IntegrationError",
    "OverflowIntegrationError",
    "PotentialSpec",
    "RefinementError",
    "ReflectionZero",
    "ScanSeries",
    "ScatterPoint",
    "StepControl",
    "WaveState",
    "WedgeGeometry",
    "WedgescatterError",
    "contour_eigenvalues",
    "contour_wronskian",
    "dirichlet_eigenvalues",
    "dminus_amplitudes",
    "energy_grid",
    "hermitian_partner_eigen",
    "locate_minima",
    "match_eigenvalues",
    "plane_wave_bc",
    "propagate",
    "propagate_fixed_rk4",
    "propagate_scaled",
    "q_eval",
    "q_prime",
    "refine_series_zeros",
    "refine_zero",
    "rt_amplitudes",
    "scan_energies",
    "scattering_run",
    "stokes_wedges",
    "wkb_bc",
    "wronskian",
]
