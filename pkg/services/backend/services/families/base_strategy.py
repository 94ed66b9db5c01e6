"""
Base class for largest-bounded-subset strategies
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from itertools import product
from typing import List, Optional, Sequence, Tuple

import structlog

from core.config import Settings, get_settings
from core.exceptions import VerificationError
from schemas.reports import SubsetCertificate, SubsetReport
from services.classes import CandidateClass, format_class
from services.exact import ScaledVector, scan_pairs

logger = structlog.get_logger()


@dataclass
class BoundedSubset:
    """Subset of a class whose pairwise squared distances are at most 2m"""

    cls: CandidateClass
    points: List[ScaledVector]
    certificate: SubsetCertificate
    strategy: str
    label: str
    bound: Optional[int] = None
    alternatives: List[str] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.points)

    def to_report(self) -> SubsetReport:
        return SubsetReport(
            notation=format_class(self.cls),
            size=self.size,
            certificate=self.certificate,
            strategy=self.strategy,
            label=self.label,
            bound=self.bound,
            alternatives=list(self.alternatives),
        )


class BaseSubsetStrategy(ABC):
    """Abstract base class for largest-bounded-subset strategies"""

    name = "base"

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    @abstractmethod
    def applies(self, X: CandidateClass, m: int) -> bool:
        """
        Whether this strategy can produce the largest subset of X

        Args:
            X: Addable class
            m: Word length (the bound is 2m)
        """
        pass

    @abstractmethod
    def build(self, X: CandidateClass, m: int) -> BoundedSubset:
        """
        Build the subset

        Args:
            X: Addable class for which applies() returned True
            m: Word length

        Returns:
            BoundedSubset with certificate and the bound it matches
        """
        pass

    def assemble_points(self, X: CandidateClass, per_block: Sequence[Sequence[Tuple[int, ...]]]) -> List[ScaledVector]:
        """Product of per-block numerator lists, lexicographically sorted"""
        points = [
            ScaledVector(X.n, X.m, tuple(v for block in blocks for v in block))
            for blocks in product(*per_block)
        ]
        return sorted(points, key=lambda p: p.nums)

    def validate(self, subset: BoundedSubset, m: int) -> None:
        """
        Check every pair of the subset is within squared distance 2m.

        Raises:
            VerificationError: with the first pair exceeding the bound
        """
        if subset.size < 2:
            return
        n = subset.cls.n
        limit = 2 * m * n * n
        scan = scan_pairs(subset.points, allowed=range(limit + 1), threads=self.settings.threads)
        if scan.violation is not None:
            i, j, num = scan.violation
            logger.error("subset_validation_failed", strategy=self.name, label=subset.label, first=i, second=j)
            raise VerificationError(
                f"{subset.label}: pair at squared distance {num}/{n * n} exceeds {2 * m}",
                subset.points[i].nums,
                subset.points[j].nums,
                f"{num}/{n * n}",
            )

    def check_bound(self, subset: BoundedSubset) -> None:
        """
        Check a construction has exactly the size of the bound it cites.

        Raises:
            VerificationError: construction size differs from its bound
        """
        if subset.certificate != SubsetCertificate.EKR_CONSTRUCTION or subset.bound is None:
            return
        if subset.size != subset.bound:
            logger.error("construction_size_mismatch", strategy=self.name, label=subset.label,
                         size=subset.size, bound=subset.bound)
            raise VerificationError(
                f"{subset.label}: construction has {subset.size} members but cites the bound {subset.bound}"
            )
