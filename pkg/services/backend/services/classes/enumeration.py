"""Explicit enumeration of class members."""
from itertools import product
from typing import List, Optional, Tuple

import structlog
from sympy.utilities.iterables import multiset_permutations

from core.config import get_settings
from core.exceptions import ClassSizeError
from services.exact import ScaledVector

from .patterns import BlockPattern, CandidateClass

logger = structlog.get_logger()


def block_members(block: BlockPattern) -> List[Tuple[int, ...]]:
    """All coordinate permutations of the block, lexicographically ascending"""
    return [tuple(p) for p in multiset_permutations(sorted(block.numerators()))]


def enumerate_class(X: CandidateClass, cap: Optional[int] = None) -> List[ScaledVector]:
    """
    All members of X in lexicographic order of their numerators.

    Args:
        X: Candidate class
        cap: Maximum number of members to materialize (defaults to the
            configured enumeration cap)

    Raises:
        ClassSizeError: the class has more than `cap` members
    """
    cap = get_settings().enumeration_cap if cap is None else cap
    size = X.size
    if size > cap:
        raise ClassSizeError(size, cap)
    per_block = [block_members(block) for block in X.blocks]
    members = [
        ScaledVector(X.n, X.m, tuple(v for block in blocks for v in block))
        for blocks in product(*per_block)
    ]
    logger.debug("class_enumerated", n=X.n, m=X.m, size=size)
    return members
