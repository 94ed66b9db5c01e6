"""
Tests for intersecting families and their bounds
"""
from itertools import combinations

import pytest

from core.exceptions import PreconditionError
from services.families import (
    cross_pair_bound,
    cross_s_bound,
    ekr_bound,
    ekr_families,
    frankl_size,
    gen_frankl,
    intersection,
    min_intersection,
    scale_family,
    family_sum_bound,
    triangle_decomposition,
    triangle_product_bound,
)
from services.families.solver import max_independent_set


@pytest.mark.unit
class TestFranklFamilies:
    """Test suite for gen_frankl and frankl_size"""

    def test_star(self):
        """Test r = 0 is the star through the first t points"""
        members = gen_frankl(5, 2, 1, 0)
        assert len(members) == frankl_size(5, 2, 1, 0) == 4
        assert all(member[0] == 1 for member in members)

    def test_size_matches(self):
        """Test the counted size equals the generated size"""
        for n, k, t, r in [(7, 3, 1, 1), (8, 4, 2, 1), (9, 5, 2, 3), (7, 4, 2, 2)]:
            assert len(gen_frankl(n, k, t, r)) == frankl_size(n, k, t, r)

    def test_known_sizes(self):
        """Test sizes of a few families"""
        assert frankl_size(7, 3, 1, 1) == 13
        assert frankl_size(8, 4, 2, 1) == 17
        assert frankl_size(9, 5, 2, 3) == 56

    def test_t_intersecting(self):
        """Test every pair of members shares at least t points"""
        members = gen_frankl(8, 4, 2, 1)
        assert min_intersection(members) >= 2
        assert all(sum(member) == 4 for member in members)

    def test_descending_order(self):
        """Test members come in descending lexicographic order"""
        members = gen_frankl(7, 3, 1, 1)
        assert members == sorted(members, reverse=True)
        assert len(set(members)) == len(members)

    @pytest.mark.parametrize("n,k,t,r", [(5, 2, 0, 0), (5, 6, 1, 0), (4, 3, 1, 2), (6, 2, 1, 2)])
    def test_domain(self, n, k, t, r):
        """Test parameters outside the family domain are refused"""
        with pytest.raises(PreconditionError):
            gen_frankl(n, k, t, r)

    def test_scale_family(self):
        """Test 1 maps to k0 and 0 to k0 - n"""
        assert scale_family([(1, 0, 1)], 2, 3) == [(2, -1, 2)]


@pytest.mark.unit
class TestEkrBound:
    """Test suite for ekr_bound and ekr_families"""

    def test_trivial(self):
        """Test any two k-sets already share t points"""
        bound = ekr_bound(5, 4, 3)
        assert bound.regime == "trivial"
        assert bound.bound == 5

    def test_star_regime(self):
        """Test large n gives the star family"""
        bound = ekr_bound(9, 4, 1)
        assert bound.regime == "case-1"
        assert bound.bound == 56
        assert bound.label == "case-1"

    def test_half_ties(self):
        """Test n = 2k with t = 1 ties every index"""
        bound = ekr_bound(8, 4, 1)
        assert bound.tie
        assert bound.bound == 35

    def test_intermediate_regime(self):
        """Test a strict intermediate index beats the star"""
        bound = ekr_bound(8, 4, 2)
        assert bound.regime == "case-2"
        assert bound.r == 1
        assert bound.bound == 17
        assert bound.label == "r=1"

    def test_tie_outside_domain(self):
        """Test a tie whose second family is not defined returns one family"""
        bound = ekr_bound(7, 4, 2)
        assert bound.tie
        assert bound.r == 2
        assert bound.bound == 15
        families = ekr_families(7, 4, 2)
        assert [r for r, _ in families] == [2]

    def test_nine_five_two(self):
        """Test the (9, 5, 2) tie at r = 3"""
        bound = ekr_bound(9, 5, 2)
        assert bound.tie
        assert bound.r == 3
        assert bound.bound == 56

    def test_families_realize_bound(self):
        """Test the extremal family reaches the bound and is t-intersecting"""
        for n, k, t in [(9, 4, 1), (8, 4, 2), (11, 4, 1)]:
            r, members = ekr_families(n, k, t)[0]
            assert len(members) == ekr_bound(n, k, t).bound
            assert min_intersection(members) >= t

    def test_trivial_family_is_everything(self):
        """Test the trivial regime returns all k-sets"""
        [(r, members)] = ekr_families(5, 4, 3)
        assert r == 0
        assert len(members) == 5

    def test_domain(self):
        """Test k above n is refused"""
        with pytest.raises(PreconditionError):
            ekr_bound(3, 4, 1)


@pytest.mark.unit
class TestCrossBounds:
    """Test suite for cross-intersecting bounds"""

    def test_pair_bound(self):
        """Test the pair bound C(n,k) - C(n-k,k) + 1"""
        assert cross_pair_bound(7, 3) == 32

    def test_pair_bound_domain(self):
        """Test n below 2k is refused"""
        with pytest.raises(PreconditionError):
            cross_pair_bound(5, 3)

    def test_s_bound(self):
        """Test the s-family bound s * C(n-1, k-1)"""
        assert cross_s_bound(7, 3, 3) == 45

    def test_s_bound_domain(self):
        """Test s at most n/k is refused"""
        with pytest.raises(PreconditionError):
            cross_s_bound(7, 2, 3)
        with pytest.raises(PreconditionError):
            cross_s_bound(6, 3, 3)


@pytest.mark.unit
class TestTriangles:
    """Test suite for the cyclic triangle decomposition"""

    def test_covers_every_pair_once(self):
        """Test the seven triangles partition the 21 pairs"""
        triangles = triangle_decomposition(7)
        pairs = [pair for triangle in triangles for pair in triangle]
        assert len(triangles) == 7
        assert len(pairs) == len(set(pairs)) == 21

    def test_pairs_disjoint_within_triangle(self):
        """Test the three pairs of a triangle are disjoint"""
        for triangle in triangle_decomposition(7):
            assert all(intersection(a, b) == 0 for a, b in combinations(triangle, 2))

    def test_only_seven(self):
        """Test other n are refused"""
        with pytest.raises(PreconditionError):
            triangle_decomposition(8)

    def test_product_bound(self):
        """Test the per-triangle bounds summed over the seven triangles"""
        assert triangle_product_bound(7, 3) == 315

    def test_family_sum_bound(self):
        """Test the best count of non-empty families is taken"""
        assert family_sum_bound(7, 3, 1) == 35
        assert family_sum_bound(7, 3, 2) == 35
        assert family_sum_bound(7, 3, 3) == 45

    def test_product_bound_follows_decomposition(self, mocker):
        """Test the bound is summed over the triangles actually returned"""
        triangles = triangle_decomposition(7)
        split = triangles[:-1] + [[member] for member in triangles[-1]]
        mocker.patch("services.families.frankl.triangle_decomposition", return_value=split)
        assert triangle_product_bound(7, 3) == 6 * 45 + 3 * 35

    def test_product_bound_needs_partition(self, mocker):
        """Test a decomposition missing pairs is refused"""
        mocker.patch("services.families.frankl.triangle_decomposition", return_value=triangle_decomposition(7)[:-1])
        with pytest.raises(PreconditionError):
            triangle_product_bound(7, 3)

    def test_min_intersection_small(self):
        """Test fewer than two members have no intersection"""
        assert min_intersection([(1, 0)]) is None


def _indicator_of(n, positions):
    return tuple(1 if q in positions else 0 for q in range(n))


def _all_parameters(limit):
    for n in range(1, limit + 1):
        for k in range(1, n + 1):
            for t in range(1, k + 1):
                yield n, k, t


@pytest.mark.slow
class TestExhaustiveSmallSets:
    """Test suite comparing the closed forms with exhaustive search on sets of size at most 9"""

    @pytest.mark.timeout(3600)
    def test_ekr_bound_is_largest_family(self):
        """Test ekr_bound equals the largest t-intersecting family found by the exact solver"""
        for n, k, t in _all_parameters(9):
            ksets = [_indicator_of(n, c) for c in combinations(range(n), k)]
            conflicts = [(i, j) for i, j in combinations(range(len(ksets)), 2) if intersection(ksets[i], ksets[j]) < t]
            index = {member: i for i, member in enumerate(ksets)}
            _, family = ekr_families(n, k, t)[0]
            result = max_independent_set(len(ksets), conflicts, time_budget=300.0, hint=[index[x] for x in family])
            assert result.optimal, (n, k, t)
            assert result.size == ekr_bound(n, k, t).bound == len(family), (n, k, t)

    def test_frankl_size_closed_form(self):
        """Test frankl_size counts gen_frankl over every valid parameter set"""
        checked = 0
        for n, k, t in _all_parameters(9):
            for r in range(0, k - t + 1):
                if n < t + 2 * r:
                    continue
                members = gen_frankl(n, k, t, r)
                assert len(members) == len(set(members)) == frankl_size(n, k, t, r), (n, k, t, r)
                assert min_intersection(members) is None or min_intersection(members) >= t
                checked += 1
        assert checked > 100
