"""
Tests for the classification of extended two-distance sets
"""
import pytest

from services.extended import FAMILY_THRESHOLD, affine_rank, classify_extended, embedded_hamming_points, maximal_extended_sets
from services.extended.candidates import x_family


def label_sets(report):
    return {tuple(s.labels) for s in report.sets}


@pytest.mark.unit
class TestAffineRank:
    """Test suite for affine_rank"""

    def test_edge_cases(self):
        """Test no points and a single point"""
        assert affine_rank([]) == -1
        assert affine_rank(embedded_hamming_points(3)[:1]) == 0

    def test_hamming(self):
        """Test H(n, 2) spans 2(n - 1) dimensions"""
        assert affine_rank(embedded_hamming_points(3)) == 4

    def test_lifted(self):
        """Test points off the flat raise the rank by one"""
        assert affine_rank(embedded_hamming_points(3) + x_family(3, 2, 1)) == 5


@pytest.mark.unit
class TestClassifyExtended:
    """Test suite for classify_extended"""

    def test_two(self):
        """Test n = 2"""
        report = classify_extended(2, with_rank=False)
        assert label_sets(report) == {("X1+", "X1-"), ("Y2+",), ("Y2-",), ("Z2+",), ("Z2-",)}

    def test_three(self):
        """Test n = 3: the two X2 sets and the level-3 families"""
        report = classify_extended(3, with_rank=False)
        assert label_sets(report) == {("X2+",), ("X2-",), ("Y3+",), ("Y3-",), ("Z3+",), ("Z3-",)}
        sizes = {tuple(s.labels): s.size for s in report.sets}
        assert sizes[("X2+",)] == 6
        assert sizes[("Y3-",)] == 3

    def test_five(self):
        """Test n = 5, including the mixed sets of affine rank 8"""
        report = classify_extended(5)
        sets = {tuple(s.labels): s for s in report.sets}
        assert {("X4+",), ("X4-",), ("Y5+",), ("Y5-",), ("Z5+",), ("Z5-",), ("Y2", "Z3"), ("Y3", "Z2")} == set(sets)
        assert sets[("X4+",)].size == 20
        assert sets[("Y2", "Z3")].size == 15
        assert sets[("Y2", "Z3")].affine_rank == 8

    def test_eight(self):
        """Test n = 8 adds the two sign-mixed centroid pairs"""
        labels = label_sets(classify_extended(8, with_rank=False))
        assert ("X1+", "X9-") in labels
        assert ("X1-", "X9+") in labels
        assert ("X7+",) in labels
        assert ("Y8-",) in labels

    def test_ordering(self):
        """Test sets are listed largest first"""
        sizes = [s.size for s in classify_extended(3, with_rank=False).sets]
        assert sizes == sorted(sizes, reverse=True)

    def test_representatives(self):
        """Test each reported set carries its points"""
        for s in classify_extended(3, with_rank=False).sets:
            assert len(s.representative) == s.size
            assert s.count == 1

    def test_cliques_have_two_points(self):
        """Test single points are never reported"""
        assert all(s.size >= 2 for s in maximal_extended_sets(6))


@pytest.mark.slow
class TestFourFamily:
    """Test suite for the large family at n = 4"""

    def test_grouped(self):
        """Test the 4096 sets of twelve are reported once"""
        report = classify_extended(4, with_rank=False)
        [family] = [s for s in report.sets if s.count > FAMILY_THRESHOLD]
        assert family.count == 4096
        assert family.size == 12
        assert family.labels == ["Y3+", "Y3-", "Z3+", "Z3-"]
