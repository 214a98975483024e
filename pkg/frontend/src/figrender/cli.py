"""Script entry point: figrender --figure-id N --scan a.csv [--scan b.csv] --zeros z.json --out img.png"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import FigureJob, SchemaError, render


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="figrender",
        description="Render a wedgescatter scan/zeros pair into a figure image.",
    )
    parser.add_argument("--figure-id", type=int, required=True, help="published panel id (2..13)")
    parser.add_argument(
        "--scan", type=Path, action="append", required=True,
        help="scan CSV (repeat for comparison curves)",
    )
    parser.add_argument("--zeros", type=Path, required=True, help="zeros JSON")
    parser.add_argument("--out", type=Path, required=True, help="output image path")
    args = parser.parse_args(argv)
    try:
        job = FigureJob(
            scan_paths=tuple(args.scan),
            zeros_path=args.zeros,
            figure_id=args.figure_id,
            out_path=args.out,
        )
        render(job)
    except SchemaError as exc:
        sys.stderr.write(f"figrender: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
