#!/usr/bin/env python3
"""Process-pool batches for the enumeration kernels."""

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

from config import get_config

T = TypeVar('T')


def map_chunks(func: Callable[..., T], chunks: Sequence[Tuple], threads: Optional[int] = None,
               verbose: bool = False, label: str = 'chunk') -> List[T]:
    """Run ``func(*chunk)`` for every chunk and return the results in chunk order.

    With one worker the chunks run inline; otherwise they are submitted to a
    process pool. ``func`` must be a module-level function so it can be pickled.

    Args:
        func: Chunk kernel
        chunks: Argument tuples, one per chunk
        threads: Worker count (defaults to the configured value)
        verbose: Print a progress line per finished chunk
        label: Name used in progress lines

    Returns:
        List of chunk results, in the order of ``chunks``
    """
    threads = threads or get_config().threads
    total = len(chunks)
    results: List[T] = []

    if threads <= 1 or total <= 1:
        for k, args in enumerate(chunks, 1):
            results.append(func(*args))
            if verbose:
                print(f"  [{k}/{total}] {label} done")
        return results

    with ProcessPoolExecutor(max_workers=min(threads, total)) as executor:
        futures = [executor.submit(func, *args) for args in chunks]
        for k, future in enumerate(futures, 1):
            results.append(future.result())
            if verbose:
                print(f"  [{k}/{total}] {label} done")
    return results
