"""
Tests for explicit enumeration of class members
"""
import pytest

from core.exceptions import ClassSizeError
from services.classes import BlockPattern, block_members, class_of, enumerate_class, parse_class


@pytest.mark.unit
class TestEnumeration:
    """Test suite for block_members and enumerate_class"""

    def test_block_members(self):
        """Test distinct permutations in ascending order"""
        assert block_members(BlockPattern(3, 2, (2, 1))) == [(-1, 2, 2), (2, -1, 2), (2, 2, -1)]

    def test_class_members(self):
        """Test every member belongs to the class"""
        X = parse_class("((4,1,-2)^P,(2^2,-1)^P,1^3)/3")
        members = enumerate_class(X)
        assert len(members) == X.size == 18
        assert len(set(members)) == 18
        assert all(class_of(x) == X for x in members)
        assert members == sorted(members, key=lambda x: x.nums)

    def test_cap(self):
        """Test classes above the cap are refused with their size"""
        X = parse_class("((4^6,-5^3)^P,1^9,1^9)/9")
        with pytest.raises(ClassSizeError) as excinfo:
            enumerate_class(X, cap=10)
        assert excinfo.value.count == 84
        assert excinfo.value.cap == 10

    def test_default_cap_from_settings(self, settings):
        """Test the configured cap applies when none is passed"""
        X = parse_class("((2^4,-3)^P,1^5)/5")
        assert len(enumerate_class(X)) == 5
