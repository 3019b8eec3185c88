"""Deterministic fan-out over node chunks.

Work is cut into fixed-size chunks independent of the worker count and
results are reduced in chunk order, so any ``threads`` value produces
bit-identical output. The compiled kernels release the GIL, so threads give
real speedup there.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

import numpy as np

CHUNK_SIZE = 256

T = TypeVar("T")


def source_chunks(n: int, chunk_size: int = CHUNK_SIZE) -> list[np.ndarray]:
    """Split ``0..n-1`` into int32 chunks of fixed size (worker-count independent)."""
    return [
        np.arange(lo, min(lo + chunk_size, n), dtype=np.int32)
        for lo in range(0, n, chunk_size)
    ]


def map_chunks(fn: Callable[[np.ndarray], T], chunks: Sequence[np.ndarray], threads: int) -> list[T]:
    """Apply ``fn`` to every chunk, preserving chunk order in the result list."""
    if threads <= 1 or len(chunks) <= 1:
        return [fn(chunk) for chunk in chunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, chunks))
