"""On-disk formats: scan CSV and zeros/eigenvalue JSON.

The scan CSV carries enough endpoint state to re-derive either reflection
observable offline; its header is fixed and byte-exact.  All files are UTF-8
with LF line endings and full-precision (shortest round-trip) floats, so
identical inputs produce byte-identical files.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from .errors import DomainError
from .potential import PotentialSpec
from .propagator import WaveState
from .scan import ReflectionZero, ScanSeries
from .scattering import BoundaryKind, ScatterPoint

SCAN_HEADER = (
    "E,magnitude,incident_re,incident_im,reflected_re,reflected_im,"
    "phi_re,phi_im,dphi_re,dphi_im"
)


def _fmt(x: float) -> str:
    return repr(float(x))


def write_scan_csv(path: str | Path, series: ScanSeries) -> None:
    lines = [SCAN_HEADER]
    for p in series.points:
        if p.ok:
            end = p.endpoint
            fields = (
                p.e,
                p.reflection_magnitude,
                p.incident.real,
                p.incident.imag,
                p.reflected.real,
                p.reflected.imag,
                end.value.real,
                end.value.imag,
                end.derivative.real,
                end.derivative.imag,
            )
        else:
            fields = (p.e,) + (math.nan,) * 9
        lines.append(",".join(_fmt(f) for f in fields))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def read_scan_csv(path: str | Path, spec: PotentialSpec, bc: BoundaryKind) -> ScanSeries:
    """Rebuild a ScanSeries from a scan CSV written by :func:`write_scan_csv`."""
    text = Path(path).read_text(encoding="utf-8")
    lines = [line for line in text.split("\n") if line]
    if not lines:
        raise DomainError(f"{path}: empty scan file")
    check_scan_header(lines[0], str(path))
    points = []
    for line in lines[1:]:
        vals = [float(tok) for tok in line.split(",")]
        if len(vals) != 10:
            raise DomainError(f"{path}: expected 10 columns, got {len(vals)}")
        e, _, a_re, a_im, b_re, b_im, p_re, p_im, d_re, d_im = vals
        if math.isnan(a_re):
            points.append(
                ScatterPoint(
                    e=e,
                    bc=bc,
                    incident=complex(math.nan, math.nan),
                    reflected=complex(math.nan, math.nan),
                    endpoint=None,
                    error="flagged in scan file",
                )
            )
        else:
            points.append(
                ScatterPoint(
                    e=e,
                    bc=bc,
                    incident=complex(a_re, a_im),
                    reflected=complex(b_re, b_im),
                    endpoint=WaveState(-spec.L, complex(p_re, p_im), complex(d_re, d_im)),
                )
            )
    return ScanSeries(spec=spec, bc=bc, points=tuple(points))


def check_scan_header(header: str, origin: str = "scan csv") -> None:
    """Raise a DomainError naming the first offending column on mismatch."""
    if header == SCAN_HEADER:
        return
    got = header.split(",")
    want = SCAN_HEADER.split(",")
    for i, name in enumerate(want):
        if i >= len(got) or got[i] != name:
            found = got[i] if i < len(got) else "<missing>"
            raise DomainError(f"{origin}: column {i} should be {name!r}, found {found!r}")
    raise DomainError(f"{origin}: {len(got) - len(want)} unexpected trailing column(s)")


def zeros_to_json(zeros: list[ReflectionZero]) -> str:
    records = [
        {
            "energy": z.energy,
            "residual": z.residual,
            "bracket_lo": z.bracket[0],
            "bracket_hi": z.bracket[1],
            "matched_eigenvalue": z.matched_eigenvalue,
            "oracle": z.oracle,
        }
        for z in zeros
    ]
    return json.dumps(records, indent=2) + "\n"


def write_zeros_json(path: str | Path, zeros: list[ReflectionZero]) -> None:
    Path(path).write_text(zeros_to_json(zeros), encoding="utf-8", newline="\n")


def read_zeros_json(path: str | Path) -> list[ReflectionZero]:
    records = json.loads(Path(path).read_text(encoding="utf-8"))
    return [
        ReflectionZero(
            energy=r["energy"],
            residual=r["residual"],
            bracket=(r["bracket_lo"], r["bracket_hi"]),
            matched_eigenvalue=r["matched_eigenvalue"],
            oracle=r["oracle"],
        )
        for r in records
    ]
