"""Two-distance sets extending H(n, 2) by one dimension."""

from .candidates import (
    ExtendedCandidate,
    admissible_candidates,
    beta_sq,
    build_candidate,
    embedded_hamming_points,
    pattern_blocks,
    x_family,
)
from .classify import (
    FAMILY_THRESHOLD,
    ExtendedSet,
    affine_rank,
    candidate_graph,
    classify_extended,
    maximal_extended_sets,
)

__all__ = [
    'ExtendedCandidate',
    'admissible_candidates',
    'beta_sq',
    'build_candidate',
    'embedded_hamming_points',
    'pattern_blocks',
    'x_family',
    'FAMILY_THRESHOLD',
    'ExtendedSet',
    'affine_rank',
    'candidate_graph',
    'classify_extended',
    'maximal_extended_sets',
]
