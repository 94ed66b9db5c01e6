"""
The level-collapsing modification of a class and its inverse.

Modifying a block with t >= 3 levels moves one coordinate off each extreme
level onto the neighbouring inner level (two onto the middle level when
t == 3). The block stays in its class frame, k0 is preserved and the maximum
distance to the Hamming set drops by 2(2t - t'' - 2), t'' being the level count
once a vanished bottom level is removed. Repeating it reaches a class whose
blocks all have at most two levels.
"""
from collections import deque
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import structlog

from core.exceptions import PreconditionError

from .patterns import BlockPattern, CandidateClass, is_addable, m_value, sort_classes

logger = structlog.get_logger()


def _modified_mults(mults: Sequence[int]) -> List[int]:
    t = len(mults)
    out = list(mults)
    if t == 3:
        out[0] -= 1
        out[1] += 2
        out[2] -= 1
    else:
        out[0] -= 1
        out[1] += 1
        out[t - 2] += 1
        out[t - 1] -= 1
    return out


def modify_block(block: BlockPattern) -> Tuple[BlockPattern, int]:
    """
    Modify one block.

    Returns:
        (normalized block, drop in the maximum distance to the Hamming set)

    Raises:
        PreconditionError: block has at most two levels
    """
    if block.t < 3:
        raise PreconditionError(f"modification needs t >= 3, block {block.numerators()} has t={block.t}")
    mults = _modified_mults(block.mults)
    lowered = block.t - (1 if mults[-1] == 0 else 0)
    drop = 2 * (2 * block.t - lowered - 2)
    return BlockPattern.normalized(block.n, block.k0, mults), drop


def modify(X: CandidateClass, l: int) -> CandidateClass:
    """
    Apply the modification to block l of X.

    Raises:
        PreconditionError: block l has at most two levels
    """
    if not 0 <= l < X.m:
        raise PreconditionError(f"block index {l} outside [0, {X.m})")
    block, _ = modify_block(X.blocks[l])
    return X.replace_block(l, block)


def reduce(X: CandidateClass) -> CandidateClass:
    """
    Modify repeatedly until every block has at most two levels.

    Raises:
        PreconditionError: X is not addable
    """
    if not is_addable(X):
        raise PreconditionError(f"reduce needs an addable class, M={m_value(X)}")
    current = X
    while True:
        wide = [j for j, block in enumerate(current.blocks) if block.t >= 3]
        if not wide:
            return current
        current = modify(current, wide[0])


def _frames(block: BlockPattern) -> List[Tuple[int, List[int]]]:
    """Un-normalized forms a modification could have produced this block from"""
    n, k0, mults = block.n, block.k0, list(block.mults)
    return [
        (k0, mults),
        (k0 + n, [0] + mults),
        (k0, mults + [0]),
        (k0 + n, [0] + mults + [0]),
    ]


def unmodify_block(block: BlockPattern) -> List[BlockPattern]:
    """All blocks with t >= 3 whose modification is `block`"""
    sources = []
    for k0, u in _frames(block):
        t = len(u)
        if t == 3:
            if u[1] < 2:
                continue
            source = [u[0] + 1, u[1] - 2, u[2] + 1]
        elif t >= 4:
            if u[1] < 1 or u[t - 2] < 1:
                continue
            source = list(u)
            source[0] += 1
            source[1] -= 1
            source[t - 2] -= 1
            source[t - 1] += 1
        else:
            continue
        candidate = BlockPattern(block.n, k0, tuple(source))
        if modify_block(candidate)[0] == block and candidate not in sources:
            sources.append(candidate)
    return sources


def inverse_expansions(X0: CandidateClass, m: Optional[int] = None) -> List[CandidateClass]:
    """
    All addable classes that reduce to X0, found breadth-first by inverting
    the modification one block at a time.

    Expansions are kept while M <= 2m, every block has at most m levels and
    the level total stays at most 2m - 1.

    Raises:
        PreconditionError: X0 not reduced or not addable
    """
    m = X0.m if m is None else m
    if not X0.is_reduced:
        raise PreconditionError("inverse expansion starts from a reduced class")
    if not is_addable(X0):
        raise PreconditionError(f"inverse expansion needs an addable class, M={m_value(X0)}")
    limit = Fraction(2 * m)
    if m_value(X0) >= limit:
        return []

    seen = {X0}
    found = []
    queue = deque([X0])
    while queue:
        current = queue.popleft()
        for j, block in enumerate(current.blocks):
            for source in unmodify_block(block):
                expanded = current.replace_block(j, source)
                if expanded in seen:
                    continue
                seen.add(expanded)
                if source.t > m or expanded.total_levels > 2 * m - 1:
                    continue
                if m_value(expanded) > limit or not is_addable(expanded):
                    continue
                found.append(expanded)
                queue.append(expanded)

    logger.debug("inverse_expansions_done", n=X0.n, m=m, source_m_value=str(m_value(X0)), found=len(found))
    return sort_classes(found)
