"""
Deterministic fan-out helpers.

Work is split into contiguous, ordered partitions; results always come back in
partition order, so the worker count never changes the output.
"""
from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

_log = logging.getLogger(__name__)


def resolve_workers(threads: int) -> int:
    """0 means one worker per logical core."""
    if threads and threads > 0:
        return threads
    return os.cpu_count() or 1


def partition(items: Sequence[T], parts: int) -> List[Sequence[T]]:
    """Split into at most *parts* contiguous non-empty chunks, preserving order."""
    n = len(items)
    parts = max(1, min(parts, n))
    size, extra = divmod(n, parts)
    chunks = []
    start = 0
    for p in range(parts):
        stop = start + size + (1 if p < extra else 0)
        chunks.append(items[start:stop])
        start = stop
    return [c for c in chunks if len(c)]


def map_partitions(fn: Callable[[T], R], chunks: Sequence[T], workers: int = 1) -> List[R]:
    """Apply fn to every chunk; process pool when workers > 1, results in chunk order."""
    if workers <= 1 or len(chunks) <= 1:
        return [fn(chunk) for chunk in chunks]
    _log.debug("Dispatching %d partitions to %d worker processes", len(chunks), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, chunks))
