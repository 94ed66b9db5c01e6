"""
Intersecting families of k-subsets and the bounds used for largest subsets.

Families are returned as 0/1 tuples of length n (1 marks a member of the
set). Two members of a t-intersecting family are at squared distance at most
2(k - t) as 0/1 vectors.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import List, Optional, Sequence, Tuple

import structlog

from core.exceptions import PreconditionError

logger = structlog.get_logger()

Indicator = Tuple[int, ...]


def _indicator(n: int, positions: Sequence[int]) -> Indicator:
    chosen = set(positions)
    return tuple(1 if q in chosen else 0 for q in range(n))


def _check_frankl_domain(n: int, k: int, t: int, r: int) -> None:
    if t < 1 or r < 0:
        raise PreconditionError(f"need t >= 1 and r >= 0, got t={t}, r={r}")
    if not n >= k >= t + r:
        raise PreconditionError(f"need n >= k >= t + r, got n={n}, k={k}, t={t}, r={r}")
    if n < t + 2 * r:
        raise PreconditionError(f"need n >= t + 2r, got n={n}, t={t}, r={r}")


def frankl_size(n: int, k: int, t: int, r: int) -> int:
    """Number of k-sets meeting the first t + 2r points in at least t + r of them"""
    _check_frankl_domain(n, k, t, r)
    core = t + 2 * r
    return sum(comb(core, j) * comb(n - core, k - j) for j in range(t + r, min(k, core) + 1))


def gen_frankl(n: int, k: int, t: int, r: int) -> List[Indicator]:
    """
    k-subsets of {0..n-1} containing at least t + r of the first t + 2r points.

    Returns:
        Indicator tuples in descending lexicographic order

    Raises:
        PreconditionError: parameters outside n >= k >= t + r, n >= t + 2r
    """
    _check_frankl_domain(n, k, t, r)
    core = t + 2 * r
    inner, outer = range(core), range(core, n)
    members = []
    for j in range(t + r, min(k, core) + 1):
        if k - j > n - core:
            continue
        for head in combinations(inner, j):
            for tail in combinations(outer, k - j):
                members.append(_indicator(n, head + tail))
    members.sort(reverse=True)
    return members


def scale_family(members: Sequence[Indicator], k0: int, n: int) -> List[Tuple[int, ...]]:
    """Map 1 -> k0 and 0 -> k0 - n (block numerators)"""
    return [tuple(k0 if bit else k0 - n for bit in member) for member in members]


@dataclass(frozen=True)
class EkrBound:
    """Largest t-intersecting family size and the family index reaching it"""

    bound: int
    r: int
    regime: str
    tie: bool = False

    @property
    def label(self) -> str:
        return "case-1" if self.regime == "case-1" else f"r={self.r}"


def ekr_bound(n: int, k: int, t: int) -> EkrBound:
    """
    Maximum size of a t-intersecting family of k-subsets of an n-set.

    Regimes: "trivial" when any two k-sets already share t points, "case-1"
    for n > (k - t + 1)(t + 1) (the star family), otherwise the r with
    (k - t + 1)(2 + (t - 1)/(r + 1)) < n < (k - t + 1)(2 + (t - 1)/r); on
    equality the families r and r + 1 tie.

    Raises:
        PreconditionError: unless 1 <= t <= k <= n
    """
    if not 1 <= t <= k <= n:
        raise PreconditionError(f"need 1 <= t <= k <= n, got n={n}, k={k}, t={t}")
    if t <= 2 * k - n:
        return EkrBound(comb(n, k), 0, "trivial")
    width = k - t + 1
    if n > width * (t + 1):
        return EkrBound(comb(n - t, k - t), 0, "case-1")
    if t == 1:
        # here n == 2k: every r gives the same family size
        return EkrBound(comb(n - 1, k - 1), 0, "case-3", tie=True)
    r = 0
    while True:
        lower = width * (2 + Fraction(t - 1, r + 1))
        if lower == n:
            bound = EkrBound(frankl_size(n, k, t, r), r, "case-3", tie=True)
            break
        if lower < n:
            bound = EkrBound(frankl_size(n, k, t, r), r, "case-2")
            break
        r += 1
    logger.debug("ekr_bound", n=n, k=k, t=t, bound=bound.bound, r=bound.r, regime=bound.regime)
    return bound


def ekr_families(n: int, k: int, t: int) -> List[Tuple[int, List[Indicator]]]:
    """
    The extremal families (index r, members) realizing ekr_bound; two entries
    on a tie when both indices lie in the family domain.
    """
    bound = ekr_bound(n, k, t)
    if bound.regime == "trivial":
        return [(0, [_indicator(n, c) for c in combinations(range(n), k)])]
    indices = [bound.r, bound.r + 1] if bound.tie else [bound.r]
    families = []
    for r in indices:
        if n >= t + 2 * r and k >= t + r:
            families.append((r, gen_frankl(n, k, t, r)))
    return families


def cross_pair_bound(n: int, k: int) -> int:
    """
    Upper bound on |A| + |B| for non-empty cross-intersecting families of k-sets.

    Raises:
        PreconditionError: n < 2k
    """
    if n < 2 * k:
        raise PreconditionError(f"cross-intersecting pair bound needs n >= 2k, got n={n}, k={k}")
    return comb(n, k) - comb(n - k, k) + 1


def cross_s_bound(n: int, k: int, s: int) -> int:
    """
    Upper bound on the total size of s pairwise cross-intersecting families.

    Raises:
        PreconditionError: unless n > 2k and s > n/k
    """
    if n <= 2 * k:
        raise PreconditionError(f"s-family cross bound needs n > 2k, got n={n}, k={k}")
    if s * k <= n:
        raise PreconditionError(f"s-family cross bound needs s > n/k, got s={s}, n={n}, k={k}")
    return s * comb(n - 1, k - 1)


def triangle_decomposition(n: int = 7) -> List[List[Indicator]]:
    """
    Split the 2-subsets of a 7-set into seven triples of pairwise disjoint
    pairs, the cyclic shifts of {{3,5},{2,6},{1,7}} (1-based).

    Raises:
        PreconditionError: n != 7
    """
    if n != 7:
        raise PreconditionError(f"the cyclic triangle decomposition is defined for n=7, got {n}")
    base = [(2, 4), (1, 5), (0, 6)]
    return [
        [_indicator(n, ((a + shift) % n, (b + shift) % n)) for a, b in base]
        for shift in range(n)
    ]


def family_sum_bound(n: int, k: int, s: int) -> int:
    """
    Upper bound on the total size of s families of k-sets that pairwise
    cross-intersect, any of them possibly empty: the best over the number of
    non-empty families.

    Raises:
        PreconditionError: no bound is known for some count of non-empty families
    """
    best = comb(n, k)
    for nonempty in range(2, s + 1):
        if nonempty == 2:
            best = max(best, cross_pair_bound(n, k))
        else:
            best = max(best, cross_s_bound(n, k, nonempty))
    return best


def triangle_product_bound(n: int, k: int) -> int:
    """
    Bound for a pair-block whole class times a k-set block: the 2-subsets
    are split by triangle_decomposition, the k-set families over one
    triangle pairwise cross-intersect, so the triangle bounds add up.

    Raises:
        PreconditionError: the triangles do not partition the 2-subsets into
            pairwise disjoint pairs
    """
    triangles = triangle_decomposition(n)
    members = [member for triangle in triangles for member in triangle]
    pairs = {_indicator(n, c) for c in combinations(range(n), 2)}
    if len(members) != len(pairs) or set(members) != pairs:
        raise PreconditionError(f"triangles do not partition the 2-subsets of a {n}-set")
    for triangle in triangles:
        if any(intersection(a, b) for a, b in combinations(triangle, 2)):
            raise PreconditionError(f"triangle {triangle} has overlapping pairs")
    return sum(family_sum_bound(n, k, len(triangle)) for triangle in triangles)


def intersection(a: Indicator, b: Indicator) -> int:
    return sum(x & y for x, y in zip(a, b))


def min_intersection(members: Sequence[Indicator]) -> Optional[int]:
    """Smallest pairwise intersection, None for fewer than two members"""
    if len(members) < 2:
        return None
    return min(intersection(a, b) for a, b in combinations(members, 2))
