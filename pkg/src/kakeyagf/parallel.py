"""Order-preserving map over independent work items, optionally in processes.

Results come back in submission order whatever the worker count, so any
report assembled from them is byte-identical across parallelism settings.
"""

from __future__ import annotations

import multiprocessing


def parallel_map(fn, items, workers: int = 1) -> list:
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with multiprocessing.Pool(processes=min(workers, len(items))) as pool:
        return pool.map(fn, items)
