"""
Exception hierarchy for the Hamming distance-set engine.

Domain-level problems (bad parameters, malformed vectors, unmet
preconditions) subclass ValueError so callers that only know about builtin
exceptions keep working. The CLI maps DomainError to exit code 2 and
VerificationError to exit code 1.
"""
from typing import Optional, Sequence


class HammingSearchError(Exception):
    """Base class for all engine errors"""


class DomainError(HammingSearchError, ValueError):
    """Parameter outside the supported domain (n < 2, m < 1, k > n, ...)"""


class DimensionError(DomainError):
    """Vectors or classes built for different (n, m) frames, or malformed nums"""


class EmptyInputError(DomainError):
    """Operation needs at least two points"""


class PreconditionError(DomainError):
    """An operation was called outside the cases it is defined for"""


class ClassSizeError(PreconditionError):
    """Class too large to materialize; carries the exact member count"""

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"class has {count} members, above the enumeration cap {cap}")


class UnsupportedCaseError(HammingSearchError):
    """No construction applies and the class is too large for the exact solver"""


class VerificationError(HammingSearchError):
    """A point set failed exact verification"""

    def __init__(
        self,
        message: str,
        first: Optional[Sequence[int]] = None,
        second: Optional[Sequence[int]] = None,
        sq_dist: Optional[str] = None,
    ):
        self.first = list(first) if first is not None else None
        self.second = list(second) if second is not None else None
        self.sq_dist = sq_dist
        super().__init__(message)
