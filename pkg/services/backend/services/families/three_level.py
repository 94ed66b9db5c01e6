"""
Largest low-diameter subsets of three-level blocks.

Blocks are written over {1, 0, -1} and scaled to numerators with
1 -> k0, 0 -> k0 - n, -1 -> k0 - 2n. For the pattern (1, 0^k, -1^2) the
extremal subsets are the X, Y and Z families below, each of size
C(k + 3, 3) + 2; for (1^a, 0^b, -1^c) with a + b < c one family fixing the
first coordinate is extremal.
"""
from math import comb
from typing import List, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from core.exceptions import PreconditionError

Level = Tuple[int, ...]


def _perms(values: Sequence[int]) -> List[Level]:
    return [tuple(p) for p in multiset_permutations(sorted(values))]


def _prefixed(head: int, tails: Sequence[Level]) -> List[Level]:
    return [(head,) + tail for tail in tails]


def _base(kind: str) -> Tuple[int, List[Level]]:
    if kind == "X":
        return 1, _prefixed(1, _perms([0, -1, -1])) + _prefixed(0, _perms([1, -1, -1]))
    if kind == "Y":
        return 1, _prefixed(-1, _perms([1, 0, -1]))
    if kind == "Z":
        return 2, _prefixed(-1, _perms([1, 0, 0, -1]))
    raise PreconditionError(f"unknown family kind {kind!r}, expected X, Y or Z")


def three_level_levels(kind: str, k: int) -> List[Level]:
    """
    The family over {1, 0, -1} on k + 3 coordinates, built from its base
    case by (0, previous) plus (1, (0^k, -1^2) permuted).
    """
    start, members = _base(kind)
    if k < start:
        raise PreconditionError(f"family {kind} starts at k={start}, got k={k}")
    for step in range(start + 1, k + 1):
        members = _prefixed(0, members) + _prefixed(1, _perms([0] * step + [-1, -1]))
    return sorted(members, reverse=True)


def scale_levels(members: Sequence[Level], k0: int, n: int) -> List[Tuple[int, ...]]:
    return [tuple(k0 - (1 - v) * n for v in member) for member in members]


def gen_three_level_family(kind: str, k: int, k0: int, n: int) -> List[Tuple[int, ...]]:
    """
    Scaled family for the block (k0, (k0 - n)^k, (k0 - 2n)^2).

    Raises:
        PreconditionError: n != k + 3 or k below the family's base case
    """
    if n != k + 3:
        raise PreconditionError(f"family on k + 3 = {k + 3} coordinates does not fit n={n}")
    return scale_levels(three_level_levels(kind, k), k0, n)


def three_level_bound(k: int) -> int:
    return comb(k + 3, 3) + 2


def fixed_head_levels(a: int, b: int, c: int) -> List[Level]:
    """
    (1, (1^{a-1}, 0^b, -1^c) permuted) together with (0, (1^a, 0^{b-1}, -1^c) permuted).

    Raises:
        PreconditionError: unless a, b >= 1 and a + b < c
    """
    if a < 1 or b < 1:
        raise PreconditionError(f"need a >= 1 and b >= 1, got a={a}, b={b}")
    if a + b >= c:
        raise PreconditionError(f"need a + b < c, got a={a}, b={b}, c={c}")
    members = _prefixed(1, _perms([1] * (a - 1) + [0] * b + [-1] * c))
    members += _prefixed(0, _perms([1] * a + [0] * (b - 1) + [-1] * c))
    return sorted(members, reverse=True)


def gen_fixed_head_family(a: int, b: int, c: int, k0: int) -> List[Tuple[int, ...]]:
    """Scaled extremal family for the block (k0^a, (k0 - n)^b, (k0 - 2n)^c)"""
    return scale_levels(fixed_head_levels(a, b, c), k0, a + b + c)


def fixed_head_bound(a: int, b: int, c: int) -> int:
    n = a + b + c
    return comb(n - 1, a + b - 1) * comb(a + b, a)
