"""
Scaled integer vectors and exact squared distances.

A point of R^{mn} whose coordinates all lie in (1/n)Z is stored as the
integer vector of its coordinates times n. Squared distances are then
integers divided by n^2 and never touch floating point.
"""
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, List, Optional, Sequence, Tuple

from core.exceptions import DimensionError, DomainError, EmptyInputError


def check_frame(n: int, m: int) -> None:
    """Raise DomainError unless n >= 2 and m >= 1"""
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    if m < 1:
        raise DomainError(f"m must be at least 1, got {m}")


@dataclass(frozen=True)
class ScaledVector:
    """m blocks of n coordinates, each stored as n * coordinate"""

    n: int
    m: int
    nums: Tuple[int, ...]

    def __post_init__(self):
        check_frame(self.n, self.m)
        nums = tuple(int(v) for v in self.nums)
        object.__setattr__(self, "nums", nums)
        if len(nums) != self.n * self.m:
            raise DimensionError(
                f"expected {self.n * self.m} coordinates for (n={self.n}, m={self.m}), got {len(nums)}"
            )
        for j in range(self.m):
            block_sum = sum(nums[j * self.n:(j + 1) * self.n])
            if block_sum != self.n:
                raise DimensionError(f"block {j} sums to {Fraction(block_sum, self.n)}, expected 1")

    @classmethod
    def from_blocks(cls, n: int, blocks: Sequence[Sequence[int]]) -> "ScaledVector":
        return cls(n, len(blocks), tuple(v for block in blocks for v in block))

    @classmethod
    def from_word(cls, n: int, word: Sequence[int]) -> "ScaledVector":
        """Embedding of a word of [n]^m: block j is n at position word[j]"""
        nums = []
        for letter in word:
            if not 0 <= letter < n:
                raise DomainError(f"letter {letter} outside [0, {n})")
            block = [0] * n
            block[letter] = n
            nums.extend(block)
        return cls(n, len(word), tuple(nums))

    def block(self, j: int) -> Tuple[int, ...]:
        return self.nums[j * self.n:(j + 1) * self.n]

    def blocks(self) -> List[Tuple[int, ...]]:
        return [self.block(j) for j in range(self.m)]

    @property
    def norm_sq(self) -> int:
        """Squared norm times n^2"""
        return sum(v * v for v in self.nums)

    def coordinates(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(v, self.n) for v in self.nums)

    def __str__(self) -> str:
        body = "|".join(",".join(str(v) for v in block) for block in self.blocks())
        return f"({body})/{self.n}"


@dataclass(frozen=True, order=True)
class SquaredDistance:
    """Squared distance num / n^2"""

    num: int
    n: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.n * self.n)

    @property
    def is_integer(self) -> bool:
        return self.num % (self.n * self.n) == 0

    def as_int(self) -> int:
        if not self.is_integer:
            raise DomainError(f"squared distance {self.value} is not an integer")
        return self.num // (self.n * self.n)

    def __str__(self) -> str:
        return str(self.value)


def _same_frame(x: ScaledVector, y: ScaledVector) -> None:
    if x.n != y.n or x.m != y.m:
        raise DimensionError(f"frames differ: (n={x.n}, m={x.m}) vs (n={y.n}, m={y.m})")


def sq_dist(x: ScaledVector, y: ScaledVector) -> SquaredDistance:
    """Exact squared Euclidean distance between two points of one frame"""
    _same_frame(x, y)
    return SquaredDistance(sum((a - b) ** 2 for a, b in zip(x.nums, y.nums)), x.n)


def distance_multiset(points: Sequence[ScaledVector]) -> Counter:
    """
    Multiset of squared distances over all unordered pairs.

    Returns:
        Counter mapping Fraction squared distance to pair count

    Raises:
        EmptyInputError: fewer than two points
        DimensionError: points from different frames
    """
    if len(points) < 2:
        raise EmptyInputError("distance multiset needs at least two points")
    first = points[0]
    for point in points[1:]:
        _same_frame(first, point)
    counts: Counter = Counter()
    for i in range(len(points)):
        xi = points[i].nums
        for j in range(i + 1, len(points)):
            counts[sum((a - b) ** 2 for a, b in zip(xi, points[j].nums))] += 1
    scale = first.n * first.n
    return Counter({Fraction(num, scale): count for num, count in counts.items()})


def embed_hamming(n: int, m: int) -> List[ScaledVector]:
    """All n^m embedded Hamming points, words in lexicographic order"""
    check_frame(n, m)
    return [ScaledVector.from_word(n, word) for word in product(range(n), repeat=m)]


def iter_words(n: int, m: int) -> Iterable[Tuple[int, ...]]:
    return product(range(n), repeat=m)


def word_of(x: ScaledVector) -> Optional[Tuple[int, ...]]:
    """Word of an embedded Hamming point, or None if x is not one"""
    word = []
    for block in x.blocks():
        if sorted(block) != [0] * (x.n - 1) + [x.n]:
            return None
        word.append(block.index(x.n))
    return tuple(word)
