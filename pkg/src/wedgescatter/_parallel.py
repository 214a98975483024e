"""Order-preserving parallel map over independent energies.

The integrator kernels release the GIL, so a thread pool gives real
parallelism; WEDGESCATTER_THREADS caps the worker count.  Results are
assembled in input order, so the output is identical for any worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

ENV_THREADS = "WEDGESCATTER_THREADS"


def worker_count(explicit: int | None = None) -> int:
    if explicit is not None:
        return max(1, int(explicit))
    env = os.environ.get(ENV_THREADS)
    if env:
        return max(1, int(env))
    return min(8, os.cpu_count() or 1)


def ordered_map(fn: Callable[[T], R], items: Sequence[T], threads: int | None = None) -> list[R]:
    n = worker_count(threads)
    if n == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
