"""
Tests for the built-in reference rows and report comparison
"""
import json

import pytest

from core.exceptions import DomainError
from schemas.reports import AssembledSetReport, ClassificationReport, DeviationKind, ReferenceRow
from services.assembly import (
    KNOWN_DEVIATIONS,
    REFERENCE_LARGEST,
    REFERENCE_ROWS,
    compare_report,
    deviation_for,
    inconsistent_rows,
    load_reference,
    rows_for,
)


def report_with(n, m, *pairs):
    """Classification report whose assembled sets have the given (added, total)"""
    assembled = [
        AssembledSetReport(clique=[], components=[], added=added, total=total, verified=True)
        for added, total in pairs
    ]
    return ClassificationReport(
        n=n, m=m, maximal=False, assembled=assembled,
        largest_total=max(total for _, total in pairs),
    )


@pytest.mark.unit
class TestReferenceRows:
    """Test suite for the built-in reference rows"""

    def test_only_one_inconsistent_row(self):
        """Test the (9, 3) row whose added count misses its total"""
        [row] = inconsistent_rows()
        assert (row.m, row.n, row.added, row.total) == (3, 9, 84, 785)
        assert row.total - 9 ** 3 == 56

    def test_rows_for(self):
        """Test rows are selected by (n, m)"""
        assert {row.added for row in rows_for(11, 3)} == {55, 120}
        assert rows_for(4, 3) == []

    def test_largest_matches_rows(self):
        """Test each reference maximum appears among the rows for m >= 3"""
        for m in (3, 4):
            for n, total in REFERENCE_LARGEST[m].items():
                assert total in {row.total for row in rows_for(n, m)}


@pytest.mark.unit
class TestCompareReport:
    """Test suite for compare_report"""

    def test_all_matched(self):
        """Test a report reproducing both (11, 3) rows"""
        mismatches, notes = compare_report(report_with(11, 3, (55, 1386), (120, 1451)))
        assert mismatches == []
        assert notes == []

    def test_missing_row(self):
        """Test a missing set is reported"""
        mismatches, _ = compare_report(report_with(11, 3, (120, 1451)))
        assert [m.expected for m in mismatches] == [55]

    def test_wrong_largest(self):
        """Test the largest total is checked against the reference maximum"""
        mismatches, _ = compare_report(report_with(5, 2, (10, 35)))
        assert [m.expected for m in mismatches] == [40]

    def test_inconsistent_row_compared_by_total(self):
        """Test the (9, 3) row is matched by total and noted"""
        mismatches, notes = compare_report(report_with(9, 3, (56, 785), (252, 981)))
        assert mismatches == []
        assert len(notes) == 1
        assert "785" in notes[0]

    def test_custom_rows_skip_reference_maximum(self):
        """Test custom rows are compared without the built-in maxima"""
        rows = [ReferenceRow(m=2, n=5, added=10, total=35)]
        mismatches, _ = compare_report(report_with(5, 2, (10, 35)), rows)
        assert mismatches == []


@pytest.mark.unit
class TestKnownDeviations:
    """Test suite for reference values replaced by a recorded deviation"""

    def test_deviations_name_reference_values(self):
        """Test every deviation points at a real reference row or maximum"""
        for deviation in KNOWN_DEVIATIONS:
            if deviation.kind == DeviationKind.LARGEST:
                assert REFERENCE_LARGEST[deviation.m][deviation.n] == deviation.expected
            else:
                assert deviation.expected in {row.added for row in rows_for(deviation.n, deviation.m)}

    def test_larger_set_noted(self):
        """Test (3, 4) at 150 added points passes with notes"""
        mismatches, notes = compare_report(report_with(3, 4, (150, 231)))
        assert mismatches == []
        assert len(notes) == 2
        assert any("231" in note and "222" in note for note in notes)

    def test_deviation_requires_recorded_value(self):
        """Test a deviation does not excuse a value other than the recorded one"""
        mismatches, _ = compare_report(report_with(3, 4, (140, 221)))
        assert sorted(m.expected for m in mismatches) == [141, 222]

    def test_absent_row_without_counterpart(self):
        """Test the (9, 4) row with no counterpart becomes a note"""
        mismatches, notes = compare_report(report_with(9, 4, (1260, 7821), (2268, 8829)))
        assert mismatches == []
        assert any("56/9" in note for note in notes)

    def test_custom_rows_ignore_deviations(self):
        """Test user-supplied rows are compared strictly"""
        rows = [ReferenceRow(m=4, n=3, added=141, total=222)]
        mismatches, _ = compare_report(report_with(3, 4, (150, 231)), rows)
        assert [m.expected for m in mismatches] == [141]

    def test_deviation_for(self):
        """Test lookup by (n, m, kind, expected)"""
        assert deviation_for(3, 4, DeviationKind.LARGEST, 222).found == 231
        assert deviation_for(3, 4, DeviationKind.LARGEST, 141) is None
        assert deviation_for(9, 4, DeviationKind.ROW, 1008).found is None


@pytest.mark.unit
class TestLoadReference:
    """Test suite for load_reference"""

    def test_csv(self, tmp_path):
        """Test rows from CSV"""
        path = tmp_path / "rows.csv"
        path.write_text("m,n,added,total,label\n2,5,15,40,pair\n")
        assert load_reference(path) == [ReferenceRow(m=2, n=5, added=15, total=40, label="pair")]

    def test_json(self, tmp_path):
        """Test rows from JSON"""
        path = tmp_path / "rows.json"
        path.write_text(json.dumps([{"m": 3, "n": 11, "added": 120, "total": 1451}]))
        [row] = load_reference(path)
        assert row.consistent

    def test_malformed(self, tmp_path):
        """Test bad rows raise DomainError"""
        path = tmp_path / "rows.csv"
        path.write_text("m,n,added,total\nx,5,15,40\n")
        with pytest.raises(DomainError):
            load_reference(path)

    def test_missing_file(self, tmp_path):
        """Test an unreadable file raises DomainError"""
        with pytest.raises(DomainError):
            load_reference(tmp_path / "absent.json")
