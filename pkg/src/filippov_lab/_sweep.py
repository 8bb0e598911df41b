"""Chunked, order-independent execution of exhaustive sweeps."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

JOBS_ENV = "FILIPPOV_LAB_JOBS"


def resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        raw = os.environ.get(JOBS_ENV)
        jobs = int(raw) if raw else 1
    return max(1, int(jobs))


def chunked(items: Sequence[T], n: int) -> list[Sequence[T]]:
    n = max(1, min(n, len(items)))
    size, extra = divmod(len(items), n)
    out, start = [], 0
    for k in range(n):
        stop = start + size + (1 if k < extra else 0)
        out.append(items[start:stop])
        start = stop
    return out


def map_chunks(fn: Callable[..., R], context, items: Sequence[T], jobs: int | None) -> list[R]:
    """Apply ``fn(context, chunk)`` over contiguous chunks of ``items``.

    Results come back in chunk order regardless of the worker count, so
    callers that merge and sort get identical output serially or in parallel.
    """
    jobs = resolve_jobs(jobs)
    chunks = chunked(items, jobs)
    if jobs == 1 or len(chunks) <= 1:
        return [fn(context, c) for c in chunks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, [context] * len(chunks), chunks))
