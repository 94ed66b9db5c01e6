"""
Tests for deterministic work partitioning
"""
import pytest

from utils.parallel import chunked, map_chunks, map_items


@pytest.mark.unit
class TestParallel:
    """Test suite for chunked, map_chunks and map_items"""

    def test_chunked(self):
        """Test contiguous, balanced, non-empty chunks"""
        assert chunked([1, 2, 3, 4, 5], 2) == [[1, 2, 3], [4, 5]]
        assert chunked([1, 2], 5) == [[1], [2]]
        assert chunked([], 3) == []

    def test_map_items_order(self):
        """Test results keep item order for any thread count"""
        items = list(range(50))
        expected = [i * i for i in items]
        for threads in (1, 3, 8):
            assert map_items(lambda x: x * x, items, threads) == expected

    def test_map_chunks(self):
        """Test one result per chunk"""
        assert map_chunks(sum, list(range(10)), threads=2) == [10, 35]
