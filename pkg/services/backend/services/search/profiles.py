"""
Reduced profiles: which top values can be combined into an addable class.

A reduced addable class is fixed, up to block order, by l and its top values
n >= k0_1 >= ... >= k0_l > 1 (the other m - l blocks are constant). Its
maximum distance to the Hamming set is

    M = (sum_j k0_j (n - k0_j) + (m - l)(n - 1)) / n + 2l

and the class is addable iff M is an even integer at most 2m. Searches run
in integer arithmetic on M * n.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import List, Optional, Sequence, Tuple

import structlog

from core.exceptions import DomainError, PreconditionError
from services.classes import BlockPattern, CandidateClass, is_addable, m_value
from services.exact import check_frame
from utils.parallel import map_items

logger = structlog.get_logger()


@dataclass(frozen=True, order=True)
class Profile:
    """Top values of a reduced class, non-increasing, padded with 1s to length m"""

    n: int
    m: int
    l: int
    k0s: Tuple[int, ...]

    def __post_init__(self):
        k0s = tuple(self.k0s)
        object.__setattr__(self, "k0s", k0s)
        check_frame(self.n, self.m)
        if len(k0s) != self.m:
            raise DomainError(f"profile needs {self.m} top values, got {len(k0s)}")
        if list(k0s) != sorted(k0s, reverse=True):
            raise DomainError(f"top values {k0s} are not non-increasing")
        if any(k0 != 1 for k0 in k0s[self.l:]) or any(not 1 < k0 <= self.n for k0 in k0s[:self.l]):
            raise DomainError(f"top values {k0s} do not match l={self.l}")

    @classmethod
    def of(cls, n: int, m: int, top: Sequence[int]) -> "Profile":
        """Profile from the top values above 1, in any order"""
        top = sorted(top, reverse=True)
        return cls(n, m, len(top), tuple(top) + (1,) * (m - len(top)))

    @property
    def m_value(self) -> Fraction:
        return Fraction(_scaled_m_value(self.n, self.m, self.l, sum(k * (self.n - k) for k in self.k0s[:self.l])), self.n)

    @property
    def is_hamming(self) -> bool:
        return all(k0 == self.n for k0 in self.k0s)

    def canonical_class(self) -> CandidateClass:
        return CandidateClass(self.n, tuple(BlockPattern.reduced(self.n, k0) for k0 in self.k0s))


def _scaled_m_value(n: int, m: int, l: int, spread: int) -> int:
    """M * n for a profile whose first l blocks contribute `spread` = sum k0(n - k0)"""
    return spread + (m - l) * (n - 1) + 2 * l * n


def _profiles_with_l(n: int, m: int, l: int) -> List[Profile]:
    # sum k0(n - k0) over the first l blocks may not exceed (m - l)(n + 1)
    budget = 2 * m * n - _scaled_m_value(n, m, l, 0)
    found: List[Profile] = []

    def walk(prefix: List[int], spread: int):
        if len(prefix) == l:
            scaled = _scaled_m_value(n, m, l, spread)
            if scaled % n == 0 and (scaled // n) % 2 == 0 and not (l == m and all(k == n for k in prefix)):
                found.append(Profile(n, m, l, tuple(prefix) + (1,) * (m - l)))
            return
        upper = prefix[-1] if prefix else n
        for k0 in range(upper, 1, -1):
            cost = k0 * (n - k0)
            if spread + cost <= budget:
                walk(prefix + [k0], spread + cost)

    if budget >= 0:
        walk([], 0)
    return found


def enumerate_profiles(n: int, m: int, threads: int = 1) -> List[Profile]:
    """
    All reduced profiles whose class is addable, excluding the Hamming class.

    Args:
        n: Alphabet size
        m: Word length
        threads: Worker threads, one task per value of l

    Returns:
        Profiles sorted by (l, k0s)
    """
    check_frame(n, m)
    parts = map_items(lambda l: _profiles_with_l(n, m, l), list(range(m + 1)), threads)
    profiles = sorted(p for part in parts for p in part)
    logger.debug("profiles_enumerated", n=n, m=m, count=len(profiles))
    return profiles


def hamming_is_maximal(n: int, m: int) -> bool:
    """True iff no vector can be added to the embedded Hamming set"""
    return not enumerate_profiles(n, m)


def max_nonmaximal_n(m: int) -> int:
    """Largest n for which the embedded H(n, m) is not maximal"""
    if m < 2:
        raise DomainError(f"frontier is defined for m >= 2, got {m}")
    return m * m + m - 1


@dataclass
class FrontierReport:
    m: int
    n: int
    witness: Profile
    witness_m_value: Fraction
    nonmaximal_at_frontier: bool
    nonmaximal_beyond: List[int] = field(default_factory=list)

    @property
    def confirmed(self) -> bool:
        return self.nonmaximal_at_frontier and not self.nonmaximal_beyond and self.witness_m_value == 2 * self.m


def verify_frontier(m: int, extra: int = 20, threads: int = 1) -> FrontierReport:
    """
    Check the frontier by search: a profile exists at n = m^2 + m - 1 (witness
    top value m) and none for n in (m^2 + m - 1, m^2 + m - 1 + extra].
    """
    n = max_nonmaximal_n(m)
    witness = Profile.of(n, m, [m])
    beyond = [
        candidate
        for candidate in range(n + 1, n + extra + 1)
        if enumerate_profiles(candidate, m, threads)
    ]
    report = FrontierReport(
        m=m,
        n=n,
        witness=witness,
        witness_m_value=witness.m_value,
        nonmaximal_at_frontier=bool(enumerate_profiles(n, m, threads)),
        nonmaximal_beyond=beyond,
    )
    logger.info("frontier_verified", m=m, n=n, confirmed=report.confirmed, beyond=beyond)
    return report


def _check_top_values(n: int, l: int, k0s: Sequence[int]) -> None:
    if len(k0s) != l:
        raise PreconditionError(f"expected {l} top values, got {len(k0s)}")
    for k0 in k0s:
        if k0 <= 1:
            raise PreconditionError(f"top values counted by l must exceed 1, got {k0}")
        if k0 >= n:
            raise PreconditionError(f"top values must be below n={n}, got {k0}")


def min_m_for(n: int, l: int, k0s: Sequence[int]) -> int:
    """
    Least m for which the reduced profile with these top values (padded
    with 1s) is addable, in closed form.

    With i the least integer >= sum k0(1 + k0) / (n + 1), raised by one when
    n is even and i is odd, the answer is l - sum k0^2 + i n.

    Raises:
        PreconditionError: a top value outside (1, n)
    """
    _check_top_values(n, l, k0s)
    i = ceil(Fraction(sum(k * (1 + k) for k in k0s), n + 1))
    if n % 2 == 0 and i % 2 == 1:
        i += 1
    return l - sum(k * k for k in k0s) + i * n


def min_m_bruteforce(n: int, l: int, k0s: Sequence[int], limit: int = 200) -> Optional[int]:
    """Scan m upward from l and return the first m whose padded profile is addable"""
    _check_top_values(n, l, k0s)
    spread = sum(k * (n - k) for k in k0s)
    for m in range(max(l, 1), limit + 1):
        scaled = _scaled_m_value(n, m, l, spread)
        if scaled % n == 0 and (scaled // n) % 2 == 0 and scaled <= 2 * m * n:
            return m
    return None


def lift_class(X: CandidateClass, i: int) -> CandidateClass:
    """
    Append i * n constant blocks; the result is addable for m + i n and its
    maximum distance to the Hamming set grows by i (n - 1).

    Raises:
        PreconditionError: X not addable, i negative, or n even with i odd
    """
    if i < 0:
        raise PreconditionError(f"lift count must be non-negative, got {i}")
    if X.n % 2 == 0 and i % 2 == 1:
        raise PreconditionError(f"n={X.n} is even, so the lift count must be even, got {i}")
    if not is_addable(X):
        raise PreconditionError(f"lift needs an addable class, M={m_value(X)}")
    lifted = CandidateClass(X.n, X.blocks + (BlockPattern.constant(X.n),) * (i * X.n))
    logger.debug("class_lifted", n=X.n, m=X.m, i=i, new_m=lifted.m)
    return lifted
