"""Turn scan CSVs and zeros JSON into reflection-vs-energy figures.

The renderer is a pure presentation layer: every plotted number originates
in the input files (it parses, it never computes).  Each job draws the
magnitude curve(s) over energy, a dashed vertical marker at every refined
zero, and a top-edge reference tick at every matched eigenvalue.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

SCAN_HEADER = (
    "E,magnitude,incident_re,incident_im,reflected_re,reflected_im,"
    "phi_re,phi_im,dphi_re,dphi_im"
)
ZERO_KEYS = ("energy", "residual", "bracket_lo", "bracket_hi", "matched_eigenvalue", "oracle")

FIGURE_IDS = range(2, 14)

# Presentation metadata per published panel: observable label and subtitle.
_PANELS = {
    2: ("|R/T|", "-x^4 well, L = 1, plane-wave boundary"),
    3: ("|R/T|", "-x^4 well, L = 2, plane-wave boundary"),
    4: ("|R/T|", "-x^4 well, L = 5, plane-wave boundary"),
    5: ("|D-|", "-x^4 well, L = 5, semiclassical boundary"),
    6: ("|D-|", "-x^4 well, L = 5, semiclassical boundary"),
    7: ("|D-|", "-x^4 well, L = 7, semiclassical boundary"),
    8: ("|D-|", "-x^6 well, L = 5, semiclassical boundary"),
    9: ("|D-|", "-x^6 well, L = 5, semiclassical boundary"),
    10: ("|D-|", "-x^6 well, L = 5, semiclassical boundary"),
    11: ("|D-|", "-x^8 well, L = 5, semiclassical boundary"),
    12: ("|D-|", "-x^8 well, L = 5, semiclassical boundary"),
    13: ("|D-|", "-x^8 well, L = 5, semiclassical boundary"),
}


class SchemaError(ValueError):
    """An input file does not match the documented CSV/JSON schema."""


@dataclass(frozen=True)
class FigureJob:
    scan_paths: tuple[Path, ...]
    zeros_path: Path
    figure_id: int
    out_path: Path

    def __post_init__(self):
        if self.figure_id not in FIGURE_IDS:
            raise SchemaError(f"figure id must be in 2..13, got {self.figure_id}")
        if not self.scan_paths:
            raise SchemaError("at least one scan CSV is required")
        for path in (*self.scan_paths, self.zeros_path):
            if not Path(path).exists():
                raise SchemaError(f"input file not found: {path}")


def check_scan_header(header: str, origin: str) -> None:
    if header == SCAN_HEADER:
        return
    got = header.split(",")
    want = SCAN_HEADER.split(",")
    for i, name in enumerate(want):
        if i >= len(got) or got[i] != name:
            found = got[i] if i < len(got) else "<missing>"
            raise SchemaError(f"{origin}: column {i} should be {name!r}, found {found!r}")
    raise SchemaError(f"{origin}: {len(got) - len(want)} unexpected trailing column(s)")


def load_scan(path: str | Path) -> tuple[list[float], list[float]]:
    """Energies and magnitudes from one scan CSV (schema-checked)."""
    lines = [ln for ln in Path(path).read_text(encoding="utf-8").split("\n") if ln]
    if not lines:
        raise SchemaError(f"{path}: empty scan file")
    check_scan_header(lines[0], str(path))
    energies, magnitudes = [], []
    for k, line in enumerate(lines[1:], start=2):
        fields = line.split(",")
        if len(fields) != 10:
            raise SchemaError(f"{path}:{k}: expected 10 columns, found {len(fields)}")
        energies.append(float(fields[0]))
        magnitudes.append(float(fields[1]))
    return energies, magnitudes


def load_zeros(path: str | Path) -> list[dict]:
    """Zero records from a zeros JSON file (schema-checked)."""
    records = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(records, list):
        raise SchemaError(f"{path}: expected a top-level JSON list")
    for i, record in enumerate(records):
        for key in ZERO_KEYS:
            if key not in record:
                raise SchemaError(f"{path}: record {i} is missing column {key!r}")
    return records


def build_figure(job: FigureJob):
    """Assemble the matplotlib figure; returns (figure, marker energies)."""
    label, subtitle = _PANELS[job.figure_id]
    zeros = load_zeros(job.zeros_path)

    fig, ax = plt.subplots(figsize=(6.4, 4.0), dpi=150)
    for path in job.scan_paths:
        energies, magnitudes = load_scan(path)
        ax.plot(energies, magnitudes, linewidth=1.0, label=Path(path).stem)

    markers = [record["energy"] for record in zeros]
    for energy in markers:
        ax.axvline(energy, color="crimson", linestyle="--", linewidth=0.9, gid="zero-marker")

    ticks = sorted(
        {record["matched_eigenvalue"] for record in zeros if record["matched_eigenvalue"] is not None}
    )
    if ticks:
        top = ax.secondary_xaxis("top")
        top.set_xticks(ticks)
        top.set_xticklabels([f"{tick:.4f}" for tick in ticks], fontsize=7)
        top.tick_params(length=6, color="steelblue", labelcolor="steelblue")

    ax.margins(x=0.05, y=0.05)
    ax.set_ylim(bottom=0.0)
    ax.set_xlabel("E")
    ax.set_ylabel(label)
    ax.set_title(f"Figure {job.figure_id}: {subtitle}", fontsize=10)
    if len(job.scan_paths) > 1:
        ax.legend(fontsize=7)
    fig.tight_layout()
    return fig, markers


def render(job: FigureJob) -> Path:
    """Write the figure to ``job.out_path``; returns that path."""
    fig, _ = build_figure(job)
    out = Path(job.out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, metadata={"Software": "figrender"})
    plt.close(fig)
    return out
