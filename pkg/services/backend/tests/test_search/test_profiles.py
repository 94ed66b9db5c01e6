"""
Tests for reduced profiles, the maximality frontier and the least-m formula
"""
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from core.exceptions import DomainError, PreconditionError
from services.classes import is_addable, m_value, parse_class
from services.search import (
    Profile,
    enumerate_profiles,
    hamming_is_maximal,
    lift_class,
    max_nonmaximal_n,
    min_m_bruteforce,
    min_m_for,
    verify_frontier,
)


@pytest.mark.unit
class TestProfile:
    """Test suite for Profile validation and its maximum distance"""

    def test_of_pads_and_sorts(self):
        """Test top values are sorted and padded with 1s"""
        profile = Profile.of(9, 3, [4, 5])
        assert profile.l == 2
        assert profile.k0s == (5, 4, 1)

    def test_rejects_increasing(self):
        """Test top values must be non-increasing"""
        with pytest.raises(DomainError):
            Profile(9, 3, 2, (4, 5, 1))

    def test_rejects_wrong_l(self):
        """Test l must count exactly the values above 1"""
        with pytest.raises(DomainError):
            Profile(9, 3, 1, (4, 3, 1))

    def test_m_value(self):
        """Test the frontier witness reaches exactly 2m"""
        assert Profile.of(11, 3, [3]).m_value == 6
        assert Profile.of(19, 4, [4]).m_value == 8
        assert Profile.of(19, 4, [15]).m_value == 8

    def test_canonical_class(self):
        """Test the canonical class matches the known (9, 3) class"""
        X = Profile.of(9, 3, [4]).canonical_class()
        assert X == parse_class("((4^6,-5^3)^P,1^9,1^9)/9")
        assert m_value(X) == 6

    def test_hamming_profile(self):
        """Test the all-n profile is the Hamming class"""
        assert Profile.of(5, 2, [5, 5]).is_hamming
        assert not Profile.of(5, 2, [2]).is_hamming


@pytest.mark.unit
class TestEnumerateProfiles:
    """Test suite for enumerate_profiles"""

    def test_nine_three(self):
        """Test (9, 3) has the two single-block profiles"""
        assert enumerate_profiles(9, 3) == [Profile.of(9, 3, [4]), Profile.of(9, 3, [5])]

    def test_four_three_is_empty(self):
        """Test no profile exists when the Hamming set is maximal"""
        assert enumerate_profiles(4, 3) == []

    def test_nineteen_four(self):
        """Test both witnesses of the m = 4 frontier are found"""
        profiles = enumerate_profiles(19, 4)
        assert Profile.of(19, 4, [4]) in profiles
        assert Profile.of(19, 4, [15]) in profiles

    def test_every_profile_is_addable(self):
        """Test every enumerated profile has an even M of at most 2m"""
        for profile in enumerate_profiles(7, 4):
            M = profile.m_value
            assert M.denominator == 1
            assert M.numerator % 2 == 0
            assert M <= 8
            assert is_addable(profile.canonical_class())

    def test_threads_agree(self):
        """Test the threaded walk returns the same list"""
        assert enumerate_profiles(13, 4, threads=2) == enumerate_profiles(13, 4)


@pytest.mark.unit
class TestFrontier:
    """Test suite for the maximality frontier"""

    def test_max_nonmaximal_n(self):
        """Test the closed form m^2 + m - 1"""
        assert max_nonmaximal_n(2) == 5
        assert max_nonmaximal_n(3) == 11
        assert max_nonmaximal_n(4) == 19

    def test_max_nonmaximal_n_domain(self):
        """Test m below 2 is rejected"""
        with pytest.raises(DomainError):
            max_nonmaximal_n(1)

    def test_hamming_is_maximal(self):
        """Test maximality on both sides of the frontier"""
        assert not hamming_is_maximal(11, 3)
        assert hamming_is_maximal(12, 3)
        assert hamming_is_maximal(4, 3)
        assert not hamming_is_maximal(9, 3)

    @pytest.mark.parametrize("m", [2, 3])
    def test_verify_frontier(self, m):
        """Test the search confirms the frontier"""
        report = verify_frontier(m, extra=5)
        assert report.confirmed
        assert report.witness == Profile.of(report.n, m, [m])
        assert report.witness_m_value == 2 * m
        assert report.nonmaximal_beyond == []


@pytest.mark.unit
class TestMinM:
    """Test suite for the least m making a profile addable"""

    def test_known_values(self):
        """Test the closed form on small profiles"""
        assert min_m_for(3, 1, [2]) == 3
        assert min_m_for(9, 1, [4]) == 3

    def test_bruteforce_agrees(self):
        """Test the closed form against an upward scan of m"""
        for n in range(3, 13):
            for l in (1, 2):
                for k0s in combinations_with_replacement(range(2, n), l):
                    assert min_m_for(n, l, k0s) == min_m_bruteforce(n, l, k0s), (n, k0s)

    def test_at_least_l(self):
        """Test the answer never needs fewer blocks than top values"""
        assert min_m_for(10, 2, [9, 9]) >= 2

    def test_top_value_range(self):
        """Test top values must lie strictly between 1 and n"""
        with pytest.raises(PreconditionError):
            min_m_for(5, 1, [5])
        with pytest.raises(PreconditionError):
            min_m_for(5, 1, [1])
        with pytest.raises(PreconditionError):
            min_m_bruteforce(5, 2, [3])


@pytest.mark.unit
class TestLift:
    """Test suite for lift_class"""

    def test_odd_n(self):
        """Test a lift by one keeps the class addable"""
        X = parse_class("((2^4,-3)^P,1^5)/5")
        lifted = lift_class(X, 1)
        assert lifted.m == 7
        assert m_value(lifted) == m_value(X) + 4
        assert is_addable(lifted)

    def test_zero_lift(self):
        """Test lifting by zero returns the same class"""
        X = parse_class("((2^2,-1)^P,1^3,1^3)/3")
        assert lift_class(X, 0) == X

    def test_even_n_needs_even_count(self):
        """Test an odd lift over even n is refused"""
        X = parse_class("((2^4,-3)^P,1^5)/5")
        with pytest.raises(PreconditionError):
            lift_class(X, -1)
        even = Profile.of(6, 4, [4, 4]).canonical_class()
        with pytest.raises(PreconditionError):
            lift_class(even, 1)

    def test_not_addable(self):
        """Test a class above 2m cannot be lifted"""
        X = parse_class("((4,1,-2)^P,(4,1,-2)^P,1^3)/3")
        assert m_value(X) > 6
        with pytest.raises(PreconditionError):
            lift_class(X, 1)


@pytest.mark.slow
class TestFrontierWide:
    """Test suite for the frontier well past the largest non-maximal n"""

    @pytest.mark.parametrize("m", [4, 5])
    def test_verify_frontier(self, m):
        """Test no profile exists for 20 values of n past the frontier"""
        report = verify_frontier(m, extra=20)
        assert report.n == m * m + m - 1
        assert report.confirmed
