"""Derivative-free golden-section minimization on a bracket."""

from __future__ import annotations

import math
from typing import Callable

from .errors import RefinementError

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_minimize(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    xtol: float,
    *,
    check_unimodal: bool = False,
) -> tuple[float, float]:
    """Shrink [lo, hi] around the minimum of f until the bracket is < xtol wide.

    Returns (argmin, min).  With ``check_unimodal`` the first pair of interior
    probes must undercut both bracket ends, otherwise the bracket cannot hold
    a single interior minimum and a ``RefinementError`` is raised.
    """
    if not (lo < hi):
        raise RefinementError(f"empty bracket ({lo}, {hi})")
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1 = f(x1)
    f2 = f(x2)
    if check_unimodal and min(f1, f2) > max(f(lo), f(hi)):
        raise RefinementError(
            f"bracket ({lo}, {hi}) is not unimodal: interior exceeds both endpoints"
        )
    while hi - lo > xtol:
        if f1 <= f2:
            hi = x2
            x2, f2 = x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            f1 = f(x1)
        else:
            lo = x1
            x1, f1 = x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = f(x2)
    if f1 <= f2:
        return x1, f1
    return x2, f2
