"""Figure renderer for wedgescatter scan CSVs and zeros JSON."""

from .render import FigureJob, SchemaError, build_figure, load_scan, load_zeros, render

__version__ = "0.1.0"

__all__ = ["FigureJob", "SchemaError", "build_figure", "load_scan", "load_zeros", "render"]
