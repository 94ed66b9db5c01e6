"""
Tests for the committed witness point sets at (3, 4) and (9, 4)
"""
from pathlib import Path

import pytest

from schemas.reports import PairCompatibility, VerifyMode
from services.assembly import classify, pair_compatible, pair_min_sq, read_points, verify_union
from services.classes import class_of

WITNESSES = Path(__file__).parent.parent / "golden" / "witnesses"


@pytest.mark.unit
class TestLargerSetThreeFour:
    """Test suite for the 150-point set added to H(3, 4)"""

    def test_full_verification(self, settings):
        """Test every pair of the 231-point union is at squared distance 2, 4, 6 or 8"""
        n, m, points = read_points(WITNESSES / "hamming_3_4_points.json")
        assert (n, m, len(points)) == (3, 4, 150)
        certificate = verify_union(points, n, m, mode=VerifyMode.FULL)
        assert certificate.passed
        assert certificate.points == 231
        assert certificate.pairs == 231 * 230 // 2
        assert certificate.histogram == {"2": 4995, "4": 11637, "6": 7500, "8": 2433}

    def test_points_distinct(self):
        """Test no point is listed twice"""
        _, _, points = read_points(WITNESSES / "hamming_3_4_points.json")
        assert len({p.nums for p in points}) == 150


@pytest.mark.unit
class TestNonAdjacentNineFour:
    """Test suite for the (9,0^8)^P and (5^5,-4^4)^P classes in swapped block pairs"""

    def test_each_point_alone_passes(self, settings):
        """Test each canonical point is admissible against H(9, 4)"""
        n, m, points = read_points(WITNESSES / "hamming_9_4_nonadjacent.json")
        for point in points:
            assert verify_union([point], n, m, mode=VerifyMode.FULL).passed

    def test_pair_fails(self, settings):
        """Test the two canonical points are at squared distance 56/9"""
        n, m, points = read_points(WITNESSES / "hamming_9_4_nonadjacent.json")
        certificate = verify_union(points, n, m, mode=VerifyMode.FULL)
        assert not certificate.passed
        assert certificate.witness.sq_dist == "56/9"

    def test_classes_incompatible(self):
        """Test the graph never joins the two classes"""
        _, _, (x, y) = read_points(WITNESSES / "hamming_9_4_nonadjacent.json")
        X, Y = class_of(x), class_of(y)
        assert str(pair_min_sq(X, Y)) == "56/9"
        assert pair_compatible(X, Y) == PairCompatibility.NONE


@pytest.mark.slow
class TestClassifyFourDeviations:
    """Test suite for the m = 4 frames whose largest sets differ from the reference rows"""

    def test_three_four(self, settings):
        """Test (3, 4) reaches 231 and records why the reference 222 is exceeded"""
        report = classify(3, 4, settings)
        assert report.largest_total == 231
        assert 150 in {entry.added for entry in report.assembled}
        assert all(entry.verified for entry in report.assembled)
        assert report.mismatches == []
        assert any("222" in note for note in report.notes)

    def test_nine_four(self, settings):
        """Test (9, 4) keeps the 8829 maximum without the 1008-point set"""
        report = classify(9, 4, settings)
        added = {entry.added for entry in report.assembled}
        assert report.largest_total == 8829
        assert {1260, 2268} <= added
        assert report.mismatches == []
        assert any("56/9" in note for note in report.notes)
