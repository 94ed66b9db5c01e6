"""
Deterministic work partitioning over a thread pool.

Work is split into contiguous chunks; results are returned in chunk order no
matter which worker finishes first, so output never depends on the thread
count.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

import structlog

logger = structlog.get_logger()

T = TypeVar("T")
R = TypeVar("R")


def chunked(items: Sequence[T], chunks: int) -> List[Sequence[T]]:
    """Split items into at most `chunks` contiguous, non-empty slices"""
    if not items:
        return []
    chunks = max(1, min(chunks, len(items)))
    size, extra = divmod(len(items), chunks)
    slices = []
    start = 0
    for index in range(chunks):
        stop = start + size + (1 if index < extra else 0)
        slices.append(items[start:stop])
        start = stop
    return slices


def map_chunks(func: Callable[[Sequence[T]], R], items: Sequence[T], threads: int = 1) -> List[R]:
    """
    Apply func to contiguous chunks of items, results in chunk order.

    Args:
        func: Function taking a chunk (slice of items)
        items: Work items
        threads: Worker count; 1 runs inline

    Returns:
        One result per chunk, ordered like the chunks
    """
    parts = chunked(items, threads)
    if threads <= 1 or len(parts) <= 1:
        return [func(part) for part in parts]

    logger.debug("parallel_map", chunks=len(parts), threads=threads, items=len(items))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, parts))


def map_items(func: Callable[[T], R], items: Sequence[T], threads: int = 1) -> List[R]:
    """Apply func to every item, results in item order."""
    chunk_results = map_chunks(lambda part: [func(item) for item in part], items, threads)
    return [result for chunk in chunk_results for result in chunk]
