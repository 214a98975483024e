"""Per-figure scan presets: well power, box size, protocol, energy window.

Each preset reproduces one published panel.  Windows are chosen to contain
the panel's reflection zeros with comfortable margin; the level-2 quartic
panel carries a companion run at the smaller box to expose how the zero
drifts with box size.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scattering import BoundaryKind


@dataclass(frozen=True)
class FigurePreset:
    figure_id: int
    m: int
    cutoff: float
    bc: BoundaryKind
    e_min: float
    e_max: float
    de: float
    companion_cutoff: float | None = None


FIGURE_PRESETS: dict[int, FigurePreset] = {
    2: FigurePreset(2, 4, 1.0, BoundaryKind.PLANE_WAVE, 0.5, 21.0, 0.01),
    3: FigurePreset(3, 4, 2.0, BoundaryKind.PLANE_WAVE, 0.5, 28.0, 0.01),
    4: FigurePreset(4, 4, 5.0, BoundaryKind.PLANE_WAVE, 0.1, 27.5, 0.01),
    5: FigurePreset(5, 4, 5.0, BoundaryKind.WKB, 0.5, 3.0, 0.005),
    6: FigurePreset(6, 4, 5.0, BoundaryKind.WKB, 4.5, 7.5, 0.005),
    7: FigurePreset(7, 4, 7.0, BoundaryKind.WKB, 10.5, 13.0, 0.005, companion_cutoff=5.0),
    8: FigurePreset(8, 6, 5.0, BoundaryKind.WKB, 0.5, 3.0, 0.005),
    9: FigurePreset(9, 6, 5.0, BoundaryKind.WKB, 4.0, 6.5, 0.005),
    10: FigurePreset(10, 6, 5.0, BoundaryKind.WKB, 10.0, 12.5, 0.005),
    11: FigurePreset(11, 8, 5.0, BoundaryKind.WKB, 0.5, 3.0, 0.005),
    12: FigurePreset(12, 8, 5.0, BoundaryKind.WKB, 4.0, 6.5, 0.005),
    13: FigurePreset(13, 8, 5.0, BoundaryKind.WKB, 10.0, 13.0, 0.005),
}
