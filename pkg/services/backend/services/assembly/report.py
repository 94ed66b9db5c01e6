"""
Serialisation of classification results: key-sorted JSON, `n,d,total` CSV
tables and point-set files.
"""
import csv
import io
import json
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple, Union

import structlog
from pydantic import BaseModel

from core.exceptions import DomainError
from schemas.points import PointSetFile
from schemas.reports import ClassificationReport, TableRow
from services.exact import ScaledVector

logger = structlog.get_logger()

CSV_COLUMNS = ("n", "d", "total")


def to_json(payload: Union[BaseModel, Sequence[BaseModel], dict]) -> str:
    """Key-sorted JSON; identical input gives identical bytes"""
    if isinstance(payload, BaseModel):
        data = payload.model_dump(mode="json")
    elif isinstance(payload, dict):
        data = payload
    else:
        data = [item.model_dump(mode="json") for item in payload]
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def table_rows(reports: Iterable[ClassificationReport]) -> List[TableRow]:
    """One row per non-maximal n: dimension d = m(n - 1) and the largest total"""
    return [
        TableRow(n=r.n, d=r.m * (r.n - 1), total=r.largest_total)
        for r in sorted(reports, key=lambda r: (r.m, r.n))
        if not r.maximal
    ]


def rows_to_csv(rows: Iterable[TableRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([row.n, row.d, row.total])
    return buffer.getvalue()


def rows_from_csv(text: str) -> List[TableRow]:
    """
    Parse an `n,d,total` table.

    Raises:
        DomainError: missing columns or non-integer cells
    """
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or tuple(reader.fieldnames) != CSV_COLUMNS:
        raise DomainError(f"expected columns {','.join(CSV_COLUMNS)}, got {reader.fieldnames}")
    try:
        return [TableRow(n=int(r["n"]), d=int(r["d"]), total=int(r["total"])) for r in reader]
    except (TypeError, ValueError) as e:
        raise DomainError(f"malformed table row: {e}") from e


def write_points(path: Union[str, Path], n: int, m: int, points: Sequence[ScaledVector]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = PointSetFile(n=n, m=m, points=[list(p.nums) for p in points])
    path.write_text(to_json(payload))
    logger.info("points_written", path=str(path), n=n, m=m, points=len(points))
    return path


def read_points(path: Union[str, Path]) -> Tuple[int, int, List[ScaledVector]]:
    """
    Load a point-set file written by write_points.

    Returns:
        (n, m, points)

    Raises:
        DomainError: unreadable file or invalid points
    """
    try:
        payload = PointSetFile.model_validate_json(Path(path).read_text())
    except (OSError, ValueError) as e:
        raise DomainError(f"Cannot read points from {path}: {e}") from e
    return payload.n, payload.m, [ScaledVector(payload.n, payload.m, tuple(nums)) for nums in payload.points]
