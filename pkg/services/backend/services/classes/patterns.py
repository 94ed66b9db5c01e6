"""
Block patterns and candidate classes.

A block pattern is the orbit, under coordinate permutations inside one block,
of a block whose numerators are k0, k0 - n, k0 - 2n, ... with multiplicities
k_1, k_2, .... A candidate class is a product of m block patterns over the
same n; it is the orbit of a vector that might be added to the embedded
Hamming set.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, List, Sequence, Tuple

from core.exceptions import DimensionError, DomainError
from services.exact import ScaledVector, check_frame

BlockKey = Tuple[int, int, Tuple[int, ...]]


def multinomial(counts: Iterable[int]) -> int:
    counts = list(counts)
    result = factorial(sum(counts))
    for count in counts:
        result //= factorial(count)
    return result


@dataclass(frozen=True)
class BlockPattern:
    """Block with values (k0 - (i-1)n)/n repeated mults[i-1] times"""

    n: int
    k0: int
    mults: Tuple[int, ...]

    def __post_init__(self):
        mults = tuple(int(k) for k in self.mults)
        object.__setattr__(self, "mults", mults)
        if self.n < 2:
            raise DomainError(f"n must be at least 2, got {self.n}")
        if not mults or any(k < 0 for k in mults):
            raise DimensionError(f"invalid multiplicities {mults}")
        if sum(mults) != self.n:
            raise DimensionError(f"multiplicities {mults} do not sum to n={self.n}")
        if mults[0] == 0 or mults[-1] == 0:
            raise DimensionError(f"pattern {mults} is not normalized")
        expected = 1 + sum(i * k for i, k in enumerate(mults))
        if self.k0 != expected:
            raise DimensionError(f"k0={self.k0} inconsistent with multiplicities {mults} (expected {expected})")

    @classmethod
    def normalized(cls, n: int, k0: int, mults: Sequence[int]) -> "BlockPattern":
        """Strip zero multiplicities at both ends; a leading strip lowers k0 by n"""
        mults = list(mults)
        while mults and mults[0] == 0:
            mults.pop(0)
            k0 -= n
        while mults and mults[-1] == 0:
            mults.pop()
        return cls(n, k0, tuple(mults))

    @classmethod
    def reduced(cls, n: int, k0: int) -> "BlockPattern":
        """Two-level block (k0^{n+1-k0}, (k0-n)^{k0-1}); k0 = 1 gives the constant block"""
        if not 1 <= k0 <= n:
            raise DomainError(f"reduced block needs 1 <= k0 <= n, got k0={k0}, n={n}")
        return cls.normalized(n, k0, (n + 1 - k0, k0 - 1))

    @classmethod
    def constant(cls, n: int) -> "BlockPattern":
        return cls(n, 1, (n,))

    @classmethod
    def from_numerators(cls, n: int, nums: Sequence[int]) -> "BlockPattern":
        """
        Pattern of a block given by its numerators (coordinates times n).

        Raises:
            DimensionError: wrong length, block sum != n, or values not on one n-lattice
        """
        nums = [int(v) for v in nums]
        if len(nums) != n:
            raise DimensionError(f"block has {len(nums)} entries, expected {n}")
        if sum(nums) != n:
            raise DimensionError(f"block {nums} sums to {Fraction(sum(nums), n)}, expected 1")
        top = max(nums)
        mults = [0] * ((top - min(nums)) // n + 1)
        for value in nums:
            if (top - value) % n:
                raise DimensionError(f"block values {nums} are not spaced by multiples of 1")
            mults[(top - value) // n] += 1
        return cls(n, top, tuple(mults))

    @property
    def t(self) -> int:
        return len(self.mults)

    @property
    def key(self) -> BlockKey:
        return (self.t, self.k0, self.mults)

    @property
    def is_constant(self) -> bool:
        return self.t == 1

    @property
    def is_hamming(self) -> bool:
        return self.k0 == self.n and self.mults == (1, self.n - 1)

    def values(self) -> List[int]:
        """Numerator of each level, top first"""
        return [self.k0 - i * self.n for i in range(self.t)]

    def numerators(self) -> Tuple[int, ...]:
        """The canonical block: numerators in non-increasing order"""
        return tuple(v for v, k in zip(self.values(), self.mults) for _ in range(k))

    @property
    def size(self) -> int:
        return multinomial(self.mults)

    def max_internal_sq(self) -> int:
        """Largest squared distance between two members (anti-sorted pairing)"""
        desc = self.numerators()
        return sum((a - b) ** 2 for a, b in zip(desc, reversed(desc))) // (self.n * self.n)

    def m_contribution(self) -> Fraction:
        """This block's share of the maximum squared distance to the Hamming set"""
        n, k0 = self.n, self.k0
        squares = sum((i + 1) ** 2 * k for i, k in enumerate(self.mults))
        return Fraction(n - n * n - 2 * n * k0 - k0 * k0 + n * squares + 2 * self.t * n, n)

    def norm_sq(self) -> Fraction:
        return Fraction(sum(v * v * k for v, k in zip(self.values(), self.mults)), self.n * self.n)


@dataclass(frozen=True)
class CandidateClass:
    """Product of m block patterns sharing n; block order matters"""

    n: int
    blocks: Tuple[BlockPattern, ...]

    def __post_init__(self):
        blocks = tuple(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        check_frame(self.n, len(blocks))
        for block in blocks:
            if block.n != self.n:
                raise DimensionError(f"block built for n={block.n} in a class over n={self.n}")

    @classmethod
    def of(cls, blocks: Sequence[BlockPattern]) -> "CandidateClass":
        if not blocks:
            raise DomainError("a class needs at least one block")
        return cls(blocks[0].n, tuple(blocks))

    @classmethod
    def hamming(cls, n: int, m: int) -> "CandidateClass":
        return cls(n, tuple(BlockPattern(n, n, (1, n - 1)) for _ in range(m)))

    @property
    def m(self) -> int:
        return len(self.blocks)

    @property
    def size(self) -> int:
        result = 1
        for block in self.blocks:
            result *= block.size
        return result

    @property
    def key(self) -> Tuple[BlockKey, ...]:
        return tuple(block.key for block in self.blocks)

    @property
    def total_levels(self) -> int:
        return sum(block.t for block in self.blocks)

    @property
    def is_hamming_class(self) -> bool:
        return all(block.is_hamming for block in self.blocks)

    @property
    def is_reduced(self) -> bool:
        return all(block.t <= 2 for block in self.blocks)

    def replace_block(self, j: int, block: BlockPattern) -> "CandidateClass":
        blocks = list(self.blocks)
        blocks[j] = block
        return CandidateClass(self.n, tuple(blocks))

    def permuted(self, order: Sequence[int]) -> "CandidateClass":
        """Class whose block j is this class's block order[j]"""
        if sorted(order) != list(range(self.m)):
            raise DomainError(f"{list(order)} is not a permutation of the {self.m} blocks")
        return CandidateClass(self.n, tuple(self.blocks[j] for j in order))

    def orbit_key(self) -> Tuple[BlockKey, ...]:
        """Key shared by all block permutations of this class"""
        return tuple(sorted(self.key, reverse=True))

    def orbit_representative(self) -> "CandidateClass":
        return CandidateClass(self.n, tuple(sorted(self.blocks, key=lambda b: b.key, reverse=True)))

    def max_internal_sq(self) -> int:
        return sum(block.max_internal_sq() for block in self.blocks)

    def non_constant_blocks(self) -> List[int]:
        return [j for j, block in enumerate(self.blocks) if not block.is_constant]


@dataclass(frozen=True)
class IndicatorProfile:
    """Level hit in each block by the coordinate a Hamming word selects (1-based)"""

    levels: Tuple[int, ...]

    @classmethod
    def for_word(cls, x: ScaledVector, word: Sequence[int]) -> "IndicatorProfile":
        if len(word) != x.m:
            raise DimensionError(f"word of length {len(word)} for m={x.m}")
        levels = []
        for block, letter in zip(x.blocks(), word):
            levels.append((max(block) - block[letter]) // x.n + 1)
        return cls(tuple(levels))

    def flags(self, X: "CandidateClass") -> List[List[int]]:
        """0/1 matrix: row j has a single 1 at the level hit in block j"""
        return [[1 if i + 1 == level else 0 for i in range(block.t)] for block, level in zip(X.blocks, self.levels)]


def m_value(X: CandidateClass) -> Fraction:
    """Maximum squared distance from any member of X to the embedded Hamming set"""
    return sum((block.m_contribution() for block in X.blocks), Fraction(0))


def is_addable(X: CandidateClass) -> bool:
    """True iff m_value(X) is an even integer in (0, 2m]"""
    value = m_value(X)
    return value.denominator == 1 and value.numerator % 2 == 0 and 0 < value <= 2 * X.m


def distance_from_profile(X: CandidateClass, profile: IndicatorProfile) -> Fraction:
    """
    Squared distance from a member of X to a Hamming point whose word hits
    the given levels; it depends only on the levels, not on the member.
    """
    if len(profile.levels) != X.m:
        raise DimensionError(f"profile covers {len(profile.levels)} blocks, class has {X.m}")
    total = Fraction(0)
    for block, level in zip(X.blocks, profile.levels):
        if not 1 <= level <= block.t or block.mults[level - 1] == 0:
            raise DomainError(f"level {level} is not present in block {block.numerators()}")
        hit = Fraction(block.values()[level - 1], block.n)
        total += block.norm_sq() + 1 - 2 * hit
    return total


def canonical_element(X: CandidateClass) -> ScaledVector:
    """The member whose blocks are all non-increasing"""
    return ScaledVector.from_blocks(X.n, [block.numerators() for block in X.blocks])


def class_of(x: ScaledVector) -> CandidateClass:
    """The candidate class containing x"""
    return CandidateClass(x.n, tuple(BlockPattern.from_numerators(x.n, block) for block in x.blocks()))


def sort_classes(classes: Iterable[CandidateClass]) -> List[CandidateClass]:
    """Deduplicated classes in a stable order"""
    return sorted(set(classes), key=lambda X: X.key)
