"""
Exact verification that added points together with the embedded Hamming
set form an m-distance set.

Pairs inside the Hamming set are counted combinatorially (n^m C(m,h)(n-1)^h / 2
pairs at squared distance 2h). Added-vs-Hamming distances are exhaustive in
both modes: `fast` convolves per-block value counts, `full` scans every
embedded word. Added-vs-added pairs are exhaustive up to `sample_pairs` pairs
in `fast` mode and sampled with a fixed seed above it; `full` is always
exhaustive.
"""
from collections import Counter
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

import numpy as np
import structlog

from core.config import get_settings
from core.exceptions import DimensionError
from schemas.reports import VerificationCertificate, VerifyMode, Witness
from services.exact import (
    ScaledVector,
    check_frame,
    hamming_distance_values,
    hamming_scan_full,
    scan_pairs,
    to_matrix,
    word_at,
)
from utils.memory_monitor import monitor_memory

logger = structlog.get_logger()


def hamming_pair_counts(n: int, m: int) -> Counter:
    """Numerators (d^2 * n^2) of pairs inside the embedded Hamming set"""
    total = n ** m
    return Counter({2 * h * n * n: total * comb(m, h) * (n - 1) ** h // 2 for h in range(1, m + 1)})


def _hamming_witness(x: ScaledVector, allowed: set) -> Witness:
    _, nums = hamming_scan_full(x)
    index = int(np.flatnonzero(~np.isin(nums, np.array(sorted(allowed), dtype=np.int64)))[0])
    y = ScaledVector.from_word(x.n, word_at(index, x.n, x.m))
    return Witness(first=list(x.nums), second=list(y.nums), sq_dist=str(Fraction(int(nums[index]), x.n * x.n)))


def _sampled_pairs(points: Sequence[ScaledVector], sample: int, seed: int, allowed: set):
    matrix = to_matrix(points)
    rng = np.random.default_rng(seed)
    size = len(points)
    left = rng.integers(0, size, sample)
    right = rng.integers(0, size - 1, sample)
    right = right + (right >= left)
    histogram: Counter = Counter()
    violation = None
    if matrix is not None:
        diff = matrix[left] - matrix[right]
        values = np.einsum("ij,ij->i", diff, diff)
        uniques, counts = np.unique(values, return_counts=True)
        histogram.update({int(u): int(c) for u, c in zip(uniques, counts)})
        bad = np.flatnonzero(~np.isin(values, np.array(sorted(allowed), dtype=np.int64)))
        if bad.size:
            i = int(bad[0])
            violation = (int(left[i]), int(right[i]), int(values[i]))
    else:
        for i, j in zip(left.tolist(), right.tolist()):
            value = sum((a - b) ** 2 for a, b in zip(points[i].nums, points[j].nums))
            histogram[value] += 1
            if violation is None and value not in allowed:
                violation = (i, j, value)
    return histogram, violation


@monitor_memory('verify_union')
def verify_union(
    points: Sequence[ScaledVector],
    n: int,
    m: int,
    mode: VerifyMode = VerifyMode.FAST,
    sample_pairs: Optional[int] = None,
    seed: Optional[int] = None,
    threads: Optional[int] = None,
) -> VerificationCertificate:
    """
    Check that points together with the embedded H(n, m) have all squared
    distances in {2, 4, ..., 2m}.

    Args:
        points: Added points of the (n, m) frame
        n: Alphabet size
        m: Word length
        mode: fast or full
        sample_pairs: Added-vs-added pair count above which fast mode samples
        seed: Sampling seed
        threads: Worker threads for pair scans

    Returns:
        Certificate with the histogram of squared distances over all pairs of
        the union, or a witness pair on failure

    Raises:
        DimensionError: a point from another frame
    """
    check_frame(n, m)
    settings = get_settings()
    mode = VerifyMode(mode)
    sample_pairs = settings.sample_pairs if sample_pairs is None else sample_pairs
    seed = settings.seed if seed is None else seed
    threads = settings.threads if threads is None else threads
    for point in points:
        if point.n != n or point.m != m:
            raise DimensionError(f"point of frame (n={point.n}, m={point.m}) in a check for (n={n}, m={m})")

    scale = n * n
    allowed = {2 * h * scale for h in range(1, m + 1)}
    histogram = hamming_pair_counts(n, m)
    pairs = sum(histogram.values())
    sampled = False

    def certificate(passed: bool, witness: Optional[Witness] = None) -> VerificationCertificate:
        return VerificationCertificate(
            mode=mode,
            passed=passed,
            points=n ** m + len(points),
            pairs=pairs,
            histogram={str(Fraction(num, scale)): count for num, count in sorted(histogram.items())},
            sampled=sampled,
            witness=witness,
        )

    for x in points:
        if mode == VerifyMode.FULL:
            values, _ = hamming_scan_full(x)
        else:
            values = hamming_distance_values(x)
        bad = [num for num in values if num not in allowed]
        if bad:
            logger.warning("verification_failed", n=n, m=m, against="hamming", sq_dist=str(Fraction(bad[0], scale)))
            return certificate(False, _hamming_witness(x, allowed))
        histogram.update(values)
        pairs += sum(values.values())

    total_pairs = len(points) * (len(points) - 1) // 2
    if total_pairs:
        if mode == VerifyMode.FAST and total_pairs > sample_pairs:
            sampled = True
            found, violation = _sampled_pairs(points, sample_pairs, seed, allowed)
            pairs += sample_pairs
        else:
            scan = scan_pairs(points, allowed=allowed, threads=threads)
            found, violation = scan.histogram, scan.violation
            pairs += scan.pairs
        histogram.update(found)
        if violation is not None:
            i, j, num = violation
            logger.warning("verification_failed", n=n, m=m, against="added", sq_dist=str(Fraction(num, scale)))
            return certificate(False, Witness(
                first=list(points[i].nums), second=list(points[j].nums), sq_dist=str(Fraction(num, scale))
            ))

    logger.info("verification_passed", n=n, m=m, mode=mode.value, points=len(points), pairs=pairs, sampled=sampled)
    return certificate(True)
