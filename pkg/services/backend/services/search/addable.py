"""
All addable candidate classes for a given (n, m).

Two independent routes produce the same set: realizing every reduced profile
in every block order and expanding those with M < 2m, or walking all
normalized block patterns directly under the level-count limits.
"""
from dataclasses import dataclass, field
from typing import Dict, List

import structlog
from sympy.utilities.iterables import multiset_permutations

from services.classes import (
    BlockPattern,
    CandidateClass,
    inverse_expansions,
    is_addable,
    m_value,
    sort_classes,
)
from services.exact import check_frame
from utils.parallel import map_items

from .profiles import Profile, enumerate_profiles

logger = structlog.get_logger()


def realize_profile(profile: Profile) -> List[CandidateClass]:
    """Every block order of the profile's reduced class"""
    n = profile.n
    return sort_classes(
        CandidateClass(n, tuple(BlockPattern.reduced(n, k0) for k0 in order))
        for order in multiset_permutations(list(profile.k0s))
    )


@dataclass
class AddableBreakdown:
    """Addable classes split into reduced ones, those with room below 2m, and expansions"""

    n: int
    m: int
    profiles: List[Profile] = field(default_factory=list)
    reduced: List[CandidateClass] = field(default_factory=list)
    below_limit: List[CandidateClass] = field(default_factory=list)
    expanded: List[CandidateClass] = field(default_factory=list)

    @property
    def all_classes(self) -> List[CandidateClass]:
        return sort_classes(self.reduced + self.expanded)

    @property
    def hamming_is_maximal(self) -> bool:
        return not self.reduced


def addable_breakdown(n: int, m: int, threads: int = 1) -> AddableBreakdown:
    """Profiles, their realized reduced classes and the inverse expansions"""
    check_frame(n, m)
    profiles = enumerate_profiles(n, m, threads)
    reduced = sort_classes(X for profile in profiles for X in realize_profile(profile))
    below = [X for X in reduced if m_value(X) < 2 * m]
    expansions = map_items(lambda X: inverse_expansions(X, m), below, threads)
    expanded = sort_classes(X for part in expansions for X in part)
    logger.info(
        "classes_enumerated",
        n=n,
        m=m,
        profiles=len(profiles),
        reduced=len(reduced),
        below_limit=len(below),
        expanded=len(expanded),
    )
    return AddableBreakdown(n=n, m=m, profiles=profiles, reduced=reduced, below_limit=below, expanded=expanded)


def enumerate_addable_classes(n: int, m: int, threads: int = 1) -> List[CandidateClass]:
    """
    Every addable class over (n, m), block orders counted separately.

    Args:
        n: Alphabet size
        m: Word length
        threads: Worker threads for the expansion step

    Returns:
        Reduced classes and their expansions, sorted by parameter tuple
    """
    return addable_breakdown(n, m, threads).all_classes


def block_patterns(n: int, max_levels: int) -> List[BlockPattern]:
    """All normalized block patterns over n with at most max_levels levels"""
    patterns = [BlockPattern.constant(n)]

    def compositions(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for t in range(2, max_levels + 1):
        for first in range(1, n):
            for last in range(1, n - first + 1):
                rest = n - first - last
                if t == 2 and rest:
                    continue
                for middle in compositions(rest, t - 2) if t > 2 else [()]:
                    mults = (first,) + middle + (last,)
                    k0 = 1 + sum(i * k for i, k in enumerate(mults))
                    patterns.append(BlockPattern(n, k0, mults))
    return patterns


def direct_addable_search(n: int, m: int) -> List[CandidateClass]:
    """
    Addable classes found by walking all block patterns with t_j <= m and
    sum t_j <= 2m - 1, pruned on the partial maximum distance.
    """
    check_frame(n, m)
    limit = 2 * m * n
    floor = n - 1
    scored: Dict[BlockPattern, int] = {}
    for pattern in block_patterns(n, m):
        contribution = pattern.m_contribution() * n
        scored[pattern] = int(contribution)
    ordered = sorted(scored, key=lambda p: (scored[p], p.key))

    found: List[CandidateClass] = []

    def walk(prefix: List[BlockPattern], scaled: int, levels: int):
        remaining = m - len(prefix)
        if remaining == 0:
            candidate = CandidateClass(n, tuple(prefix))
            if not candidate.is_hamming_class and is_addable(candidate):
                found.append(candidate)
            return
        for pattern in ordered:
            score = scored[pattern]
            if scaled + score + (remaining - 1) * floor > limit:
                break
            if levels + pattern.t + (remaining - 1) > 2 * m - 1:
                continue
            walk(prefix + [pattern], scaled + score, levels + pattern.t)

    walk([], 0, 0)
    result = sort_classes(found)
    logger.debug("direct_search_done", n=n, m=m, found=len(result))
    return result

