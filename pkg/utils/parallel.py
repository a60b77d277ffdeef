import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Tuple, TypeVar

from config import Config

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def chunk_range(lo: int, hi: int, size: int = None) -> List[Tuple[int, int]]:
    """Split the inclusive range [lo, hi] into ascending (start, stop) chunks"""
    size = size or Config.SCAN_CHUNK
    return [(start, min(start + size - 1, hi)) for start in range(lo, hi + 1, size)]


def ordered_map(func: Callable[[T], R], items: Iterable[T], threads: int = 1) -> List[R]:
    """Map func over items, returning results in input order for any thread count"""
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    logger.info(f"Scanning {len(items)} chunks on {threads} threads")
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(func, items))


def scan_range(func: Callable[[int], R], lo: int, hi: int, threads: int = 1) -> List[R]:
    """Apply func to every integer in [lo, hi], flattened in ascending order"""
    def run_chunk(bounds: Tuple[int, int]) -> List[R]:
        start, stop = bounds
        return [func(d) for d in range(start, stop + 1)]

    results = []
    for chunk in ordered_map(run_chunk, chunk_range(lo, hi), threads):
        results.extend(chunk)
    return results
