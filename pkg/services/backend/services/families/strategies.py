"""
Largest-bounded-subset strategies, tried in registry order.
"""
from typing import List, Optional, Tuple

import numpy as np
import structlog

from core.exceptions import UnsupportedCaseError
from schemas.reports import SubsetCertificate
from services.classes import BlockPattern, CandidateClass, block_members, enumerate_class, format_class
from services.exact import conflict_pairs

from .base_strategy import BaseSubsetStrategy, BoundedSubset
from .frankl import cross_s_bound, ekr_bound, ekr_families, scale_family, triangle_product_bound
from .solver import max_independent_set
from .three_level import fixed_head_bound, gen_fixed_head_family, gen_three_level_family, three_level_bound

logger = structlog.get_logger()


def _single_block(X: CandidateClass) -> Optional[int]:
    """Index of the only non-constant block, or None"""
    blocks = X.non_constant_blocks()
    return blocks[0] if len(blocks) == 1 else None


def _constant_members(X: CandidateClass, j: int, members: List[Tuple[int, ...]]):
    return [members if i == j else [block.numerators()] for i, block in enumerate(X.blocks)]


def _top_count(block: BlockPattern) -> int:
    return block.mults[0]


class WholeClassStrategy(BaseSubsetStrategy):
    """The whole class, when its diameter is already within the bound"""

    name = "whole_class"

    def applies(self, X: CandidateClass, m: int) -> bool:
        return X.max_internal_sq() <= 2 * m

    def build(self, X: CandidateClass, m: int) -> BoundedSubset:
        points = enumerate_class(X, self.settings.enumeration_cap)
        return BoundedSubset(
            cls=X,
            points=points,
            certificate=SubsetCertificate.WHOLE_CLASS,
            strategy=self.name,
            label="whole",
            bound=X.size,
        )


class IntersectingFamilyStrategy(BaseSubsetStrategy):
    """
    One two-level block: members are k-sets of top coordinates at squared
    distance 2(k - |A & B|), so the subset is a largest (k - m)-intersecting
    family.
    """

    name = "intersecting_family"

    def applies(self, X: CandidateClass, m: int) -> bool:
        j = _single_block(X)
        return j is not None and X.blocks[j].t == 2

    def build(self, X: CandidateClass, m: int) -> BoundedSubset:
        j = _single_block(X)
        block = X.blocks[j]
        n, k = X.n, _top_count(block)
        t = k - m
        bound = ekr_bound(n, k, t)
        families = ekr_families(n, k, t)
        r, members = families[0]
        labels = [f"F_{index}({k},{t},{block.k0})" for index, _ in families]
        if bound.tie and len(families) == 1:
            labels.append(f"F_{bound.r + 1}({k},{t},{block.k0}) (ties, outside the family domain)")
        points = self.assemble_points(X, _constant_members(X, j, scale_family(members, block.k0, n)))
        return BoundedSubset(
            cls=X,
            points=points,
            certificate=SubsetCertificate.EKR_CONSTRUCTION,
            strategy=self.name,
            label=labels[0],
            bound=bound.bound,
            alternatives=labels[1:],
        )


def _three_level_fits(block: BlockPattern, m: int) -> bool:
    # the extremal families bound subsets of diameter below the block's own
    return block.t == 3 and block.max_internal_sq() - 2 == 2 * m


class ThreeLevelFamilyStrategy(BaseSubsetStrategy):
    """One block (1, 0^k, -1^2): the X, Y, Z families"""

    name = "three_level_family"

    def applies(self, X: CandidateClass, m: int) -> bool:
        j = _single_block(X)
        if j is None:
            return False
        block = X.blocks[j]
        return _three_level_fits(block, m) and block.mults[0] == 1 and block.mults[1] >= 1 and block.mults[2] == 2

    def build(self, X: CandidateClass, m: int) -> BoundedSubset:
        j = _single_block(X)
        block = X.blocks[j]
        k = block.mults[1]
        members = gen_three_level_family("X", k, block.k0, X.n)
        alternatives = [f"Y_{k}({block.k0})"]
        if k >= 2:
            alternatives.append(f"Z_{k}({block.k0})")
        return BoundedSubset(
            cls=X,
            points=self.assemble_points(X, _constant_members(X, j, members)),
            certificate=SubsetCertificate.EKR_CONSTRUCTION,
            strategy=self.name,
            label=f"X_{k}({block.k0})",
            bound=three_level_bound(k),
            alternatives=alternatives,
        )


class ThreeLevelSparseStrategy(BaseSubsetStrategy):
    """One block (1^a, 0^b, -1^c) with a + b < c: fix the first coordinate"""

    name = "three_level_sparse"

    def applies(self, X: CandidateClass, m: int) -> bool:
        j = _single_block(X)
        if j is None:
            return False
        block = X.blocks[j]
        if not _three_level_fits(block, m):
            return False
        a, b, c = block.mults
        return a >= 1 and b >= 1 and a + b < c

    def build(self, X: CandidateClass, m: int) -> BoundedSubset:
        j = _single_block(X)
        block = X.blocks[j]
        a, b, c = block.mults
        members = gen_fixed_head_family(a, b, c, block.k0)
        return BoundedSubset(
            cls=X,
            points=self.assemble_points(X, _constant_members(X, j, members)),
            certificate=SubsetCertificate.EKR_CONSTRUCTION,
            strategy=self.name,
            label=f"fixed-first({a},{b},{c})",
            bound=fixed_head_bound(a, b, c),
        )


class ProductStrategy(BaseSubsetStrategy):
    """
    Two two-level blocks: one block whole, the other an intersecting family
    tight enough for the cross pairs. Applies when a counting bound for the
    pair of blocks is known: a Hamming-type block against a block with m top
    (or bottom) coordinates, or the pair block against a 3-set block at n = 7.
    """

    name = "product"

    def _blocks(self, X: CandidateClass) -> Optional[Tuple[int, int]]:
        blocks = X.non_constant_blocks()
        if len(blocks) != 2 or any(X.blocks[j].t != 2 for j in blocks):
            return None
        return blocks[0], blocks[1]

    def _known_bound(self, X: CandidateClass, m: int) -> Optional[int]:
        pair = self._blocks(X)
        if pair is None:
            return None
        n = X.n
        for whole, family in (pair, pair[::-1]):
            W, F = X.blocks[whole], X.blocks[family]
            k = _top_count(F)
            if W.is_hamming and m in (k, n - k) and n > 2 * m:
                return cross_s_bound(n, m, n)
            if n == 7 and m == 4 and min(_top_count(W), n - _top_count(W)) == 2 and min(k, n - k) == 3:
                return triangle_product_bound(n, 3)
        return None

    def applies(self, X: CandidateClass, m: int) -> bool:
        return self._known_bound(X, m) is not None

    def _construction(self, X: CandidateClass, m: int, whole: int, family: int):
        W, F = X.blocks[whole], X.blocks[family]
        allowed = 2 * m - W.max_internal_sq()
        if allowed < 0:
            return None
        k = _top_count(F)
        t = k - allowed // 2
        if t < 1:
            return None
        return ekr_bound(X.n, k, t), k, t

    def build(self, X: CandidateClass, m: int) -> BoundedSubset:
        first, second = self._blocks(X)
        best = None
        for whole, family in ((first, second), (second, first)):
            found = self._construction(X, m, whole, family)
            if found is None:
                continue
            bound, k, t = found
            size = X.blocks[whole].size * bound.bound
            if best is None or size > best[0]:
                best = (size, whole, family, k, t)

        _, whole, family, k, t = best
        F = X.blocks[family]
        r, members = ekr_families(X.n, k, t)[0]
        per_block = [[block.numerators()] for block in X.blocks]
        per_block[whole] = block_members(X.blocks[whole])
        per_block[family] = scale_family(members, F.k0, X.n)
        return BoundedSubset(
            cls=X,
            points=self.assemble_points(X, per_block),
            certificate=SubsetCertificate.EKR_CONSTRUCTION,
            strategy=self.name,
            label=f"whole x F_{r}({k},{t},{F.k0})",
            bound=self._known_bound(X, m),
        )


class ExactSolverStrategy(BaseSubsetStrategy):
    """Maximum clique of the within-bound graph, as an independent set of conflicts"""

    name = "exact_solver"

    def applies(self, X: CandidateClass, m: int) -> bool:
        return True

    def solve(self, X: CandidateClass, m: int, hint_points=None) -> BoundedSubset:
        """
        Raises:
            UnsupportedCaseError: class larger than the budgeted solver cap
        """
        if X.size > self.settings.budgeted_clique_cap:
            raise UnsupportedCaseError(
                f"no construction applies to {format_class(X)} and its {X.size} members "
                f"exceed the solver cap {self.settings.budgeted_clique_cap}"
            )
        points = enumerate_class(X, self.settings.enumeration_cap)
        limit = 2 * m * X.n * X.n
        conflicts = conflict_pairs(points, lambda d: np.asarray(d) > limit, self.settings.threads)
        hint = None
        if hint_points is not None:
            index = {p.nums: i for i, p in enumerate(points)}
            hint = [index[p.nums] for p in hint_points if p.nums in index]
        result = max_independent_set(
            len(points), conflicts, self.settings.clique_budget, self.settings.seed, hint
        )
        certificate = SubsetCertificate.BRUTE_FORCE_CLIQUE if result.optimal else SubsetCertificate.CLIQUE_MAXIMAL
        return BoundedSubset(
            cls=X,
            points=[points[i] for i in result.chosen],
            certificate=certificate,
            strategy=self.name,
            label="max-clique" if result.optimal else "maximal-clique",
            bound=result.size if result.optimal else None,
        )

    def build(self, X: CandidateClass, m: int) -> BoundedSubset:
        return self.solve(X, m)
