"""
Candidates for extending the embedded H(n, 2) inside the (2n - 1)-dimensional
space: one block carries ((k/n)^(n-k+1), (k/n - 1)^(k-1)) in some order, the
other block is the centroid 1/n^n, and the extra coordinate is +-beta with
beta^2 = 1 + 1/n - k + k^2/n.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import List, Tuple

import structlog

from core.exceptions import DomainError, PreconditionError
from schemas.points import RootPointModel
from services.exact import RootPoint, ScaledVector, embed_hamming, quad_sq_dist

logger = structlog.get_logger()

ALLOWED = frozenset({Fraction(2), Fraction(4)})
KINDS = ("Y", "Z")


def beta_sq(n: int, k: int) -> Fraction:
    """Squared extra coordinate forced on a level-k candidate; negative means inadmissible"""
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    if not 1 <= k <= n + 1:
        raise PreconditionError(f"k must lie in [1, {n + 1}], got {k}")
    return 1 + Fraction(1, n) - k + Fraction(k * k, n)


def pattern_blocks(n: int, k: int) -> List[Tuple[int, ...]]:
    """All placements of the level-k block as numerators over n, in lexicographic order of the low positions"""
    blocks = []
    for low in combinations(range(n), k - 1):
        low = set(low)
        blocks.append(tuple(k - n if i in low else k for i in range(n)))
    return blocks


def is_centroid_level(n: int, k: int) -> bool:
    return k in (1, n + 1)


def sign_label(sign: int, beta: Fraction) -> str:
    if beta == 0:
        return ""
    return "+" if sign > 0 else "-"


@dataclass(frozen=True)
class ExtendedCandidate:
    """
    One family of candidate points. kind is Y (pattern in the first block),
    Z (pattern in the second block) or X for the centroid levels k = 1 and
    k = n + 1, where both block orders give the same single point.
    """

    n: int
    kind: str
    k: int
    sign: int
    beta_sq: Fraction
    members: Tuple[RootPoint, ...] = field(repr=False)

    @property
    def label(self) -> str:
        return f"{self.kind}{self.k}{sign_label(self.sign, self.beta_sq)}"

    @property
    def size(self) -> int:
        return len(self.members)


def _member(n: int, pattern: Tuple[int, ...], pattern_first: bool, beta: Fraction, sign: int) -> RootPoint:
    centroid = (1,) * n
    blocks = (pattern, centroid) if pattern_first else (centroid, pattern)
    return RootPoint(ScaledVector.from_blocks(n, blocks), beta, sign)


def build_candidate(n: int, kind: str, k: int, sign: int) -> ExtendedCandidate:
    """
    Members of one candidate family.

    Raises:
        PreconditionError: negative beta^2, an unknown kind, or X away from the centroid levels
    """
    beta = beta_sq(n, k)
    if beta < 0:
        raise PreconditionError(f"level k={k} is inadmissible for n={n}: beta^2 = {beta}")
    if kind == "X":
        if not is_centroid_level(n, k):
            raise PreconditionError(f"kind X is only defined for k in (1, {n + 1}), got {k}")
        members = (_member(n, (1,) * n, True, beta, sign),)
    elif kind in KINDS:
        members = tuple(_member(n, block, kind == "Y", beta, sign) for block in pattern_blocks(n, k))
    else:
        raise PreconditionError(f"Unknown candidate kind: {kind}. Available kinds: ['X', 'Y', 'Z']")
    return ExtendedCandidate(n=n, kind=kind, k=k, sign=sign if beta else 1, beta_sq=beta, members=members)


def x_family(n: int, k: int, sign: int) -> List[RootPoint]:
    """The union of Y_k with sign s and Z_k with sign -s"""
    return list(build_candidate(n, "Y", k, sign).members) + list(build_candidate(n, "Z", k, -sign).members)


def embedded_hamming_points(n: int) -> List[RootPoint]:
    """H(n, 2) with a zero extra coordinate"""
    return [RootPoint.flat(x) for x in embed_hamming(n, 2)]


def admissible_against_hamming(point: RootPoint, hamming: List[RootPoint]) -> bool:
    for y in hamming:
        value = quad_sq_dist(point, y)
        if not value.is_rational or value.a not in ALLOWED:
            return False
    return True


def admissible_candidates(n: int) -> List[ExtendedCandidate]:
    """
    Every candidate family whose beta^2 is non-negative and whose members all
    sit at squared distance 2 or 4 from the embedded H(n, 2).

    Families with beta^2 = 0 appear once; the centroid levels appear as X.
    """
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    hamming = embedded_hamming_points(n)
    candidates = []
    for k in range(1, n + 2):
        beta = beta_sq(n, k)
        if beta < 0:
            continue
        signs = (1, -1) if beta else (1,)
        kinds = ("X",) if is_centroid_level(n, k) else KINDS
        for kind in kinds:
            for sign in signs:
                candidate = build_candidate(n, kind, k, sign)
                if all(admissible_against_hamming(p, hamming) for p in candidate.members):
                    candidates.append(candidate)
                else:
                    logger.debug("candidate_rejected", n=n, label=candidate.label)
    logger.info("extended_candidates", n=n, candidates=[c.label for c in candidates])
    return candidates


def to_model(point: RootPoint) -> RootPointModel:
    return RootPointModel(n=point.vector.n, nums=list(point.vector.nums), beta_sq=str(point.beta_sq), sign=point.sign)
