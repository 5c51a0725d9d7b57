"""Fork-join helper for exhaustive scans.

Work is split into contiguous index ranges; results come back in range order
so merged output never depends on the worker count.
"""

import os
from concurrent.futures import ProcessPoolExecutor


def resolve_jobs(jobs):
    if not jobs:
        return os.cpu_count() or 1
    return max(1, int(jobs))


def split_range(total, parts):
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    bounds, start = [], 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        bounds.append((start, stop))
        start = stop
    return bounds


def map_ranges(fn, ctx, total, jobs=1, *args):
    """Evaluate ``fn(ctx, start, stop, *args)`` over a partition of range(total)."""
    jobs = resolve_jobs(jobs)
    bounds = split_range(total, jobs)
    if jobs == 1 or len(bounds) == 1:
        return [fn(ctx, lo, hi, *args) for lo, hi in bounds]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, ctx, lo, hi, *args) for lo, hi in bounds]
        return [f.result() for f in futures]
