"""Exact arithmetic: scaled vectors, squared distances, quadratic values."""

from .vectors import (
    ScaledVector,
    SquaredDistance,
    check_frame,
    distance_multiset,
    embed_hamming,
    iter_words,
    sq_dist,
    word_of,
)
from .quadratic import QuadraticValue, RootPoint, quad_sq_dist, split_square
from .scan import (
    PairScan,
    conflict_pairs,
    hamming_distance_values,
    hamming_scan_full,
    scan_pairs,
    to_matrix,
    word_at,
)

__all__ = [
    'ScaledVector',
    'SquaredDistance',
    'check_frame',
    'distance_multiset',
    'embed_hamming',
    'iter_words',
    'sq_dist',
    'word_of',
    'QuadraticValue',
    'RootPoint',
    'quad_sq_dist',
    'split_square',
    'PairScan',
    'conflict_pairs',
    'hamming_distance_values',
    'hamming_scan_full',
    'scan_pairs',
    'to_matrix',
    'word_at',
]
