"""
Tests for the modification of classes, reduction and inverse expansion
"""
import pytest

from core.exceptions import PreconditionError
from services.classes import (
    BlockPattern,
    inverse_expansions,
    m_value,
    modify,
    modify_block,
    parse_class,
    reduce,
    unmodify_block,
)


@pytest.mark.unit
class TestModifyBlock:
    """Test suite for modify_block"""

    def test_three_levels_to_constant(self):
        """Test (4,1,-2) collapses to the constant block with drop 4"""
        block, drop = modify_block(BlockPattern(3, 4, (1, 1, 1)))
        assert block == BlockPattern.constant(3)
        assert drop == 4

    def test_empty_middle_level(self):
        """Test (5,-1^2) becomes (2^2,-1) with drop 2"""
        block, drop = modify_block(BlockPattern(3, 5, (1, 0, 2)))
        assert block == BlockPattern(3, 2, (2, 1))
        assert drop == 2

    def test_four_levels(self):
        """Test only the extreme levels and their neighbours change"""
        block, drop = modify_block(BlockPattern(7, 16, (1, 1, 1, 4)))
        assert block == BlockPattern(7, 9, (2, 2, 3))
        assert drop == 4

    def test_drop_matches_m_value(self):
        """Test the drop equals the change of m_value"""
        for text in ["((4,1,-2)^P,1^3,1^3)/3", "((5,-1^2)^P,1^3,1^3)/3", "((9,2^4,-5^2)^P,1^7,1^7,1^7)/7"]:
            X = parse_class(text)
            _, drop = modify_block(X.blocks[0])
            assert m_value(X) - m_value(modify(X, 0)) == drop

    def test_two_levels_rejected(self):
        """Test blocks with at most two levels cannot be modified"""
        with pytest.raises(PreconditionError):
            modify_block(BlockPattern(3, 2, (2, 1)))

    def test_unmodify(self):
        """Test unmodify_block lists exactly the sources"""
        assert BlockPattern(3, 4, (1, 1, 1)) in unmodify_block(BlockPattern.constant(3))
        for source in unmodify_block(BlockPattern(3, 2, (2, 1))):
            assert modify_block(source)[0] == BlockPattern(3, 2, (2, 1))


@pytest.mark.unit
class TestReduce:
    """Test suite for reduce"""

    @pytest.mark.parametrize("text,expected", [
        ("((4,1,-2)^P,1^3,1^3)/3", "(1^3,1^3,1^3)/3"),
        ("((5,-1^2)^P,1^3,1^3)/3", "((2^2,-1)^P,1^3,1^3)/3"),
        ("((2^2,-1)^P,1^3,1^3)/3", "((2^2,-1)^P,1^3,1^3)/3"),
    ])
    def test_reduce(self, text, expected):
        """Test repeated modification reaches a reduced class"""
        assert reduce(parse_class(text)) == parse_class(expected)

    def test_reduce_needs_addable(self):
        """Test non-addable classes are rejected"""
        with pytest.raises(PreconditionError):
            reduce(parse_class("((2^2,-1)^P,1^3)/3"))

    def test_modify_index(self):
        """Test the block index is checked"""
        with pytest.raises(PreconditionError):
            modify(parse_class("((4,1,-2)^P,1^3,1^3)/3"), 3)


@pytest.mark.unit
class TestInverseExpansions:
    """Test suite for inverse_expansions"""

    def test_constant_class(self):
        """Test (1^3)^3 expands to (4,1,-2) in each block position"""
        found = inverse_expansions(parse_class("(1^3,1^3,1^3)/3"))
        assert set(found) == {
            parse_class("((4,1,-2)^P,1^3,1^3)/3"),
            parse_class("(1^3,(4,1,-2)^P,1^3)/3"),
            parse_class("(1^3,1^3,(4,1,-2)^P)/3"),
        }

    def test_two_level_class(self):
        """Test ((2^2,-1),1^3,1^3) expands to ((5,-1^2),1^3,1^3)"""
        found = inverse_expansions(parse_class("((2^2,-1)^P,1^3,1^3)/3"))
        assert found == [parse_class("((5,-1^2)^P,1^3,1^3)/3")]

    def test_all_expansions_reduce_back(self):
        """Test every expansion reduces to its source"""
        X0 = parse_class("((3^4,-3^2)^P,1^6,1^6,1^6)/6")
        for X in inverse_expansions(X0):
            assert reduce(X) == X0
            assert m_value(X) <= 8

    def test_full_class_has_no_expansion(self):
        """Test a class already at 2m has nothing above it"""
        assert inverse_expansions(parse_class("((4^6,-5^3)^P,1^9,1^9)/9")) == []

    def test_preconditions(self):
        """Test unreduced or non-addable starting classes are rejected"""
        with pytest.raises(PreconditionError):
            inverse_expansions(parse_class("((4,1,-2)^P,1^3,1^3)/3"))
        with pytest.raises(PreconditionError):
            inverse_expansions(parse_class("((2^2,-1)^P,1^3)/3"))
