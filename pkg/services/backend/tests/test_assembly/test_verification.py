"""
Tests for exact verification of assembled point sets
"""
import pytest

from core.exceptions import DimensionError
from schemas.reports import VerifyMode
from services.assembly import hamming_pair_counts, verify_union
from services.classes import enumerate_class, parse_class
from services.exact import ScaledVector


@pytest.fixture
def added_5_2():
    """The fifteen points added to H(5, 2) by its assembled set"""
    return enumerate_class(parse_class("(1^5,(2^4,-3)^P)/5")) + enumerate_class(parse_class("((3^3,-2^2)^P,1^5)/5"))


@pytest.mark.unit
class TestHammingPairCounts:
    """Test suite for hamming_pair_counts"""

    def test_five_two(self):
        """Test pairs of H(5, 2) by Hamming distance"""
        assert hamming_pair_counts(5, 2) == {50: 100, 100: 200}

    def test_total(self):
        """Test the counts add up to all pairs"""
        counts = hamming_pair_counts(3, 3)
        assert sum(counts.values()) == 27 * 26 // 2


@pytest.mark.unit
class TestVerifyUnion:
    """Test suite for verify_union"""

    def test_passes(self, settings, added_5_2):
        """Test the (5, 2) set with 40 points"""
        certificate = verify_union(added_5_2, 5, 2)
        assert certificate.passed
        assert certificate.points == 40
        assert certificate.pairs == 40 * 39 // 2
        assert certificate.witness is None
        assert not certificate.sampled
        assert set(certificate.histogram) == {"2", "4"}
        assert sum(certificate.histogram.values()) == 780

    def test_full_matches_fast(self, settings, added_5_2):
        """Test both modes give the same histogram"""
        fast = verify_union(added_5_2, 5, 2, mode=VerifyMode.FAST)
        full = verify_union(added_5_2, 5, 2, mode=VerifyMode.FULL)
        assert full.passed
        assert full.histogram == fast.histogram

    def test_sampled(self, settings, added_5_2):
        """Test fast mode samples added pairs above the limit"""
        certificate = verify_union(added_5_2, 5, 2, sample_pairs=10)
        assert certificate.passed
        assert certificate.sampled

    def test_hamming_point_fails(self, settings):
        """Test re-adding a Hamming point fails at distance 0"""
        point = ScaledVector.from_word(5, (1, 3))
        certificate = verify_union([point], 5, 2)
        assert not certificate.passed
        assert certificate.witness.sq_dist == "0"
        assert certificate.witness.first == list(point.nums)

    def test_added_pair_fails(self, settings):
        """Test two added points too far apart"""
        points = enumerate_class(parse_class("((5,-1^2)^P,1^3,1^3)/3"))
        certificate = verify_union(points, 3, 3, mode=VerifyMode.FULL)
        assert not certificate.passed
        assert certificate.witness.sq_dist == "8"

    def test_frame_mismatch(self, settings):
        """Test points from another frame are refused"""
        with pytest.raises(DimensionError):
            verify_union([ScaledVector.from_word(3, (0, 0))], 5, 2)
