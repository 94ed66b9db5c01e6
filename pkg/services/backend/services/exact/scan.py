"""
Vectorised exact distance scans.

Point sets are stacked into int64 matrices when every intermediate of the
Gram-matrix formula is provably below 2^62; otherwise scans run on Python
integers. Distances are reported as numerators over n^2.
"""
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import structlog

from utils.parallel import map_chunks

from .vectors import ScaledVector

logger = structlog.get_logger()

INT64_SAFE = 2 ** 62
ROW_CHUNK = 256


def to_matrix(points: Sequence[ScaledVector]) -> Optional[np.ndarray]:
    """int64 matrix of the points, or None if int64 could overflow"""
    if not points:
        return np.zeros((0, 0), dtype=np.int64)
    dim = len(points[0].nums)
    bound = max(abs(v) for point in points for v in point.nums)
    if 4 * dim * bound * bound >= INT64_SAFE:
        logger.info("int64_overflow_guard", dim=dim, bound=bound)
        return None
    return np.array([point.nums for point in points], dtype=np.int64)


@dataclass
class PairScan:
    """Histogram of squared-distance numerators plus the first bad pair"""

    histogram: Counter = field(default_factory=Counter)
    pairs: int = 0
    violation: Optional[Tuple[int, int, int]] = None

    def merge(self, other: "PairScan") -> "PairScan":
        self.histogram.update(other.histogram)
        self.pairs += other.pairs
        if self.violation is None:
            self.violation = other.violation
        return self


def _row_blocks(rows: int) -> List[Tuple[int, int]]:
    return [(start, min(start + ROW_CHUNK, rows)) for start in range(0, rows, ROW_CHUNK)]


def scan_pairs(
    points: Sequence[ScaledVector],
    others: Optional[Sequence[ScaledVector]] = None,
    allowed: Optional[Iterable[int]] = None,
    threads: int = 1,
) -> PairScan:
    """
    Squared distances over all pairs within `points`, or across `points` x `others`.

    Args:
        points: Scaled vectors of one frame
        others: Optional second set; when given only cross pairs are scanned
        allowed: Admissible numerators; the first pair outside it is recorded
        threads: Worker threads for the row partition

    Returns:
        PairScan with histogram keyed by numerator (distance^2 * n^2)
    """
    allowed_set = None if allowed is None else set(allowed)
    cross = others is not None
    right = others if cross else points
    left_matrix = to_matrix(points)
    right_matrix = to_matrix(right) if cross else left_matrix

    if left_matrix is None or right_matrix is None or not points or not right:
        return _scan_pairs_python(points, right, cross, allowed_set)

    allowed_array = None if allowed_set is None else np.array(sorted(allowed_set), dtype=np.int64)
    left_sq = np.einsum("ij,ij->i", left_matrix, left_matrix)
    right_sq = np.einsum("ij,ij->i", right_matrix, right_matrix)

    def scan_block(bounds_list):
        result = PairScan()
        for start, stop in bounds_list:
            gram = left_matrix[start:stop] @ right_matrix.T
            dist = left_sq[start:stop, None] + right_sq[None, :] - 2 * gram
            if cross:
                mask = np.ones(dist.shape, dtype=bool)
            else:
                mask = np.arange(right_matrix.shape[0])[None, :] > np.arange(start, stop)[:, None]
            values = dist[mask]
            uniques, counts = np.unique(values, return_counts=True)
            result.histogram.update({int(u): int(c) for u, c in zip(uniques, counts)})
            result.pairs += int(values.size)
            if allowed_array is not None and result.violation is None:
                bad = mask & ~np.isin(dist, allowed_array)
                if bad.any():
                    i, j = np.argwhere(bad)[0]
                    result.violation = (start + int(i), int(j), int(dist[i, j]))
        return result

    parts = map_chunks(scan_block, _row_blocks(left_matrix.shape[0]), threads)
    total = PairScan()
    for part in parts:
        total.merge(part)
    return total


def _scan_pairs_python(points, right, cross, allowed_set) -> PairScan:
    result = PairScan()
    for i, x in enumerate(points):
        start = 0 if cross else i + 1
        for j in range(start, len(right)):
            num = sum((a - b) ** 2 for a, b in zip(x.nums, right[j].nums))
            result.histogram[num] += 1
            result.pairs += 1
            if allowed_set is not None and result.violation is None and num not in allowed_set:
                result.violation = (i, j, num)
    return result


def conflict_pairs(
    points: Sequence[ScaledVector],
    is_conflict: Callable[[np.ndarray], np.ndarray],
    threads: int = 1,
) -> List[Tuple[int, int]]:
    """
    Index pairs i < j whose squared-distance numerator satisfies is_conflict.

    is_conflict receives an int64 array of numerators and returns a bool mask;
    it must also accept a 0-d array (used on the Python fallback path).
    """
    matrix = to_matrix(points)
    if matrix is None:
        pairs = []
        for i, x in enumerate(points):
            for j in range(i + 1, len(points)):
                num = sum((a - b) ** 2 for a, b in zip(x.nums, points[j].nums))
                if bool(is_conflict(np.array(num, dtype=object))):
                    pairs.append((i, j))
        return pairs

    sq = np.einsum("ij,ij->i", matrix, matrix)
    cols = np.arange(matrix.shape[0])

    def scan_block(bounds_list):
        found = []
        for start, stop in bounds_list:
            dist = sq[start:stop, None] + sq[None, :] - 2 * (matrix[start:stop] @ matrix.T)
            mask = (cols[None, :] > np.arange(start, stop)[:, None]) & is_conflict(dist)
            for i, j in np.argwhere(mask):
                found.append((start + int(i), int(j)))
        return found

    parts = map_chunks(scan_block, _row_blocks(matrix.shape[0]), threads)
    return [pair for part in parts for pair in part]


def hamming_distance_values(x: ScaledVector) -> Counter:
    """
    Numerators of d(x, y)^2 * n^2 over all n^m embedded words y, with multiplicity.

    For y the embedding of word w, d^2 * n^2 = |x|^2 + m*n^2 - 2n * sum_j x_j[w_j],
    so the multiset follows from convolving per-block value counts; this is
    equivalent to scanning every word.
    """
    n, m = x.n, x.m
    sums = Counter({0: 1})
    for block in x.blocks():
        block_counts = Counter(block)
        combined: Counter = Counter()
        for partial, count in sums.items():
            for value, multiplicity in block_counts.items():
                combined[partial + value] += count * multiplicity
        sums = combined
    base = x.norm_sq + m * n * n
    return Counter({base - 2 * n * total: count for total, count in sums.items()})


def hamming_scan_full(x: ScaledVector) -> Tuple[Counter, np.ndarray]:
    """
    Literal scan of x against every embedded word.

    Returns:
        (histogram of numerators, array of numerators indexed like the
        lexicographic word order, shape n^m)
    """
    n, m = x.n, x.m
    blocks = np.array(x.blocks(), dtype=np.int64)
    totals = blocks[0]
    for j in range(1, m):
        totals = np.add.outer(totals, blocks[j])
    totals = np.asarray(totals).reshape(-1)
    nums = x.norm_sq + m * n * n - 2 * n * totals
    uniques, counts = np.unique(nums, return_counts=True)
    return Counter({int(u): int(c) for u, c in zip(uniques, counts)}), nums


def word_at(index: int, n: int, m: int) -> Tuple[int, ...]:
    """Word with the given position in lexicographic order"""
    return tuple(int(v) for v in np.unravel_index(index, (n,) * m))
