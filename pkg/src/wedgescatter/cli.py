"""Command-line front end: scans, zero refinement, oracles, figure presets.

Subcommands
-----------
scan    sample a reflection observable over an energy grid, write a CSV
zeros   bracket/refine reflection zeros (fresh scan or an existing CSV),
        annotate with oracle eigenvalues, write JSON
eigen   compute bound-state energies by either oracle, print/write JSON
figure  run one published-panel preset end to end (scan CSV + zeros JSON)

Exit status: 0 success, 2 usage error, 1 numerical failure (a JSON error
record goes to stderr).  WEDGESCATTER_THREADS caps worker parallelism.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import WedgescatterError
from .oracles import ContourConfig, contour_eigenvalues, hermitian_partner_eigen
from .potential import PotentialSpec
from .presets import FIGURE_PRESETS, FigurePreset
from .propagator import StepControl
from .scan import ScanSeries, match_eigenvalues, refine_series_zeros, scan_energies
from .scattering import BoundaryKind
from .serialize import read_scan_csv, write_scan_csv, write_zeros_json

_POWERS = {"x4": 4, "x6": 6, "x8": 8}
_BCS = {"plane": BoundaryKind.PLANE_WAVE, "wkb": BoundaryKind.WKB}


def _add_grid_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--potential", choices=sorted(_POWERS), required=True)
    p.add_argument("--cutoff", type=float, required=True, help="box half-width L")
    p.add_argument("--bc", choices=sorted(_BCS), required=True)
    p.add_argument("--emin", type=float, required=True)
    p.add_argument("--emax", type=float, required=True)
    p.add_argument("--de", type=float, required=True)


def _add_tol_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rtol", type=float, default=StepControl.rtol)
    p.add_argument("--atol", type=float, default=StepControl.atol)
    p.add_argument("--threads", type=int, default=None)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wedgescatter",
        description="Reflectionless scattering off cut-off upside-down monomial wells.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    scan = sub.add_parser("scan", help="scan reflection magnitude over an energy grid")
    _add_grid_flags(scan)
    _add_tol_flags(scan)
    scan.add_argument("--out", type=Path, required=True, help="output CSV path")

    zeros = sub.add_parser("zeros", help="bracket, refine and annotate reflection zeros")
    _add_grid_flags(zeros)
    _add_tol_flags(zeros)
    zeros.add_argument("--out", type=Path, required=True, help="output JSON path")
    zeros.add_argument(
        "--scan-csv", type=Path, default=None, help="reuse an existing scan instead of rescanning"
    )
    zeros.add_argument("--etol", type=float, default=1e-6, help="refinement bracket width")
    zeros.add_argument("--depth", type=float, default=0.2, help="minimum depth vs series median")
    zeros.add_argument("--window", type=float, default=0.1, help="eigenvalue matching window")
    zeros.add_argument(
        "--oracle", choices=["contour", "hermitian", "none"], default="contour",
        help="which oracle annotates the zeros",
    )

    eigen = sub.add_parser("eigen", help="bound-state energies via an independent oracle")
    eigen.add_argument("--potential", choices=sorted(_POWERS), required=True)
    eigen.add_argument("--method", choices=["contour", "hermitian"], default="contour")
    eigen.add_argument("--count", type=int, default=3)
    eigen.add_argument("--emin", type=float, default=0.5)
    eigen.add_argument("--emax", type=float, default=13.0)
    eigen.add_argument("--de", type=float, default=0.05)
    eigen.add_argument("--out", type=Path, default=None, help="JSON output (default stdout)")
    eigen.add_argument("--threads", type=int, default=None)

    figure = sub.add_parser("figure", help="run a published-panel preset end to end")
    figure.add_argument("--id", type=int, required=True, choices=sorted(FIGURE_PRESETS))
    figure.add_argument("--out-dir", type=Path, required=True)
    figure.add_argument("--threads", type=int, default=None)
    return parser


def _oracle_energies(method: str, m: int, threads: int | None) -> tuple[list[float], str]:
    if method == "hermitian":
        if m != 4:
            raise WedgescatterError("the partner-well oracle only covers the quartic well")
        result = hermitian_partner_eigen(3)
    else:
        result = contour_eigenvalues(PotentialSpec(m, 5.0), count=3, threads=threads)
    return list(result.energies), f"{method}-x{m}"


def _zeros_for_series(series: ScanSeries, args, threads) -> list:
    ctrl = StepControl(rtol=args.rtol, atol=args.atol)
    zeros = refine_series_zeros(series, ctrl, args.etol, args.depth)
    if args.oracle != "none":
        energies, tag = _oracle_energies(args.oracle, series.spec.m, threads)
        zeros = match_eigenvalues(zeros, energies, args.window, tag)
    return zeros


def _run_scan(args) -> int:
    spec = PotentialSpec(_POWERS[args.potential], args.cutoff)
    ctrl = StepControl(rtol=args.rtol, atol=args.atol)
    series = scan_energies(
        spec, _BCS[args.bc], args.emin, args.emax, args.de, ctrl, threads=args.threads
    )
    write_scan_csv(args.out, series)
    return 0


def _run_zeros(args) -> int:
    spec = PotentialSpec(_POWERS[args.potential], args.cutoff)
    bc = _BCS[args.bc]
    if args.scan_csv is not None:
        series = read_scan_csv(args.scan_csv, spec, bc)
    else:
        ctrl = StepControl(rtol=args.rtol, atol=args.atol)
        series = scan_energies(spec, bc, args.emin, args.emax, args.de, ctrl, threads=args.threads)
    zeros = _zeros_for_series(series, args, args.threads)
    write_zeros_json(args.out, zeros)
    return 0


def _run_eigen(args) -> int:
    m = _POWERS[args.potential]
    if args.method == "hermitian":
        if m != 4:
            raise WedgescatterError("the partner-well oracle only covers the quartic well")
        result = hermitian_partner_eigen(args.count)
    else:
        result = contour_eigenvalues(
            PotentialSpec(m, 5.0), args.emin, args.emax, args.de, args.count,
            cfg=ContourConfig(e_min=args.emin, e_max=args.emax, de=args.de),
            threads=args.threads,
        )
    payload = {
        "method": result.method.value,
        "potential": args.potential,
        "count": len(result.energies),
        "energies": list(result.energies),
        "residuals": list(result.diagnostics),
    }
    text = json.dumps(payload, indent=2) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text, encoding="utf-8", newline="\n")
    return 0


def figure_outputs(figure_id: int, out_dir: Path) -> dict[str, Path]:
    """Deterministic file names for one figure preset."""
    base = f"fig{figure_id:02d}"
    preset = FIGURE_PRESETS[figure_id]
    paths = {
        "scan": out_dir / f"{base}_scan.csv",
        "zeros": out_dir / f"{base}_zeros.json",
    }
    if preset.companion_cutoff is not None:
        tag = f"L{preset.companion_cutoff:g}"
        paths["companion_scan"] = out_dir / f"{base}_scan_{tag}.csv"
        paths["companion_zeros"] = out_dir / f"{base}_zeros_{tag}.json"
    return paths


def run_figure_preset(
    preset: FigurePreset, out_dir: Path, threads: int | None = None
) -> dict[str, Path]:
    """Scan + zeros for one preset (and its companion cutoff, if any)."""
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = figure_outputs(preset.figure_id, out_dir)
    oracle_energies, tag = _oracle_energies("contour", preset.m, threads)

    def one(cutoff: float, scan_path: Path, zeros_path: Path) -> None:
        spec = PotentialSpec(preset.m, cutoff)
        series = scan_energies(
            spec, preset.bc, preset.e_min, preset.e_max, preset.de, threads=threads
        )
        write_scan_csv(scan_path, series)
        zeros = refine_series_zeros(series)
        zeros = match_eigenvalues(zeros, oracle_energies, 0.1, tag)
        write_zeros_json(zeros_path, zeros)

    one(preset.cutoff, paths["scan"], paths["zeros"])
    if preset.companion_cutoff is not None:
        one(preset.companion_cutoff, paths["companion_scan"], paths["companion_zeros"])
    return paths


def _run_figure(args) -> int:
    run_figure_preset(FIGURE_PRESETS[args.id], args.out_dir, args.threads)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.subcommand in ("scan", "zeros"):
        if not (0.0 < args.emin < args.emax):
            parser.error(f"need 0 < emin < emax, got ({args.emin}, {args.emax})")
        if args.de <= 0.0:
            parser.error(f"de must be positive, got {args.de}")
    runners = {
        "scan": _run_scan,
        "zeros": _run_zeros,
        "eigen": _run_eigen,
        "figure": _run_figure,
    }
    try:
        return runners[args.subcommand](args)
    except WedgescatterError as exc:
        record = {"error": type(exc).__name__, "message": str(exc)}
        sys.stderr.write(json.dumps(record) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
