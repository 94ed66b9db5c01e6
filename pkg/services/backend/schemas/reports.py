"""
Report schemas for classification runs
"""
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator


class SubsetCertificate(str, Enum):
    """How a largest bounded subset was justified"""
    WHOLE_CLASS = "whole-class"
    BRUTE_FORCE_CLIQUE = "brute-force-clique"
    EKR_CONSTRUCTION = "ekr-construction"
    CLIQUE_MAXIMAL = "clique-maximal"


class PairCompatibility(str, Enum):
    """How many cross pairs of two classes sit at an admissible distance"""
    NONE = "none"
    SOME = "some"
    ALL = "all"


class VerifyMode(str, Enum):
    FAST = "fast"
    FULL = "full"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class RunConfig(BaseModel):
    """CLI flags merged over environment settings"""
    command: str
    n_values: List[int] = Field(default_factory=list)
    m_values: List[int] = Field(default_factory=list)
    output_format: OutputFormat = OutputFormat.TEXT
    cache_dir: Optional[Path] = None
    use_cache: bool = True
    verify: VerifyMode = VerifyMode.FAST
    threads: int = Field(default=1, ge=1)
    clique_budget: float = Field(default=30.0, gt=0)

    @field_validator('n_values', 'm_values')
    @classmethod
    def validate_ranges(cls, v):
        if any(value < 1 for value in v):
            raise ValueError(f"range values must be positive, got {v}")
        return sorted(set(v))


class ClassEntry(BaseModel):
    """One addable class in class notation"""
    notation: str
    m_value: str
    size: int
    reduced: bool


class SubsetReport(BaseModel):
    """Largest subset of one class with pairwise squared distances at most 2m"""
    notation: str
    size: int
    certificate: SubsetCertificate
    strategy: str
    label: str
    bound: Optional[int] = None
    alternatives: List[str] = Field(default_factory=list)


class Witness(BaseModel):
    """Offending pair, as numerators, with its squared distance"""
    first: List[int]
    second: List[int]
    sq_dist: str


class VerificationCertificate(BaseModel):
    """Outcome of an exact check that the union with the Hamming set is m-distance"""
    mode: VerifyMode
    passed: bool
    points: int
    pairs: int
    histogram: Dict[str, int] = Field(default_factory=dict)
    sampled: bool = False
    witness: Optional[Witness] = None


class AssembledSetReport(BaseModel):
    """Points added for one maximal clique"""
    clique: List[str]
    components: List[SubsetReport]
    added: int
    total: int
    verified: bool
    certificate: Optional[VerificationCertificate] = None


class ReferenceMismatch(BaseModel):
    m: int
    n: int
    expected: int
    found: List[int] = Field(default_factory=list)
    message: str


class ClassificationReport(BaseModel):
    """Everything computed for one (n, m)"""
    n: int
    m: int
    maximal: bool
    classes: List[ClassEntry] = Field(default_factory=list)
    cliques: List[List[str]] = Field(default_factory=list)
    assembled: List[AssembledSetReport] = Field(default_factory=list)
    largest_total: int
    notes: List[str] = Field(default_factory=list)
    mismatches: List[ReferenceMismatch] = Field(default_factory=list)


class TableRow(BaseModel):
    """Row of a largest-cardinality table: n, dimension d = m(n - 1), total"""
    n: int
    d: int
    total: int


class ExtendedSetReport(BaseModel):
    """A maximal addable set of the codimension-one extension, or a family of them"""
    labels: List[str]
    size: int
    count: int = 1
    representative: List[Dict[str, object]] = Field(default_factory=list)
    affine_rank: Optional[int] = None


class ExtendedReport(BaseModel):
    n: int
    sets: List[ExtendedSetReport] = Field(default_factory=list)


class ReferenceRow(BaseModel):
    """Reference row: the set added for one clique and the total with the Hamming set"""
    m: int = Field(ge=1)
    n: int = Field(ge=2)
    added: int = Field(ge=0)
    total: int = Field(ge=1)
    label: str = ""

    @property
    def consistent(self) -> bool:
        return self.n ** self.m + self.added == self.total


class DeviationKind(str, Enum):
    LARGEST = "largest"
    ROW = "row"


class KnownDeviation(BaseModel):
    """
    A reference value the engine does not reproduce, with the value it finds
    instead. found is None when the reference set has no counterpart at all.
    """
    m: int = Field(ge=1)
    n: int = Field(ge=2)
    kind: DeviationKind
    expected: int
    found: Optional[int] = None
    reason: str


class EnumerationReport(BaseModel):
    """Addable classes for one (n, m), one class per block-permutation orbit"""
    n: int
    m: int
    maximal: bool
    expanded: bool = False
    classes: List[ClassEntry] = Field(default_factory=list)


class BenchRow(BaseModel):
    n: int
    m: int
    seconds: float
    classes: int
    largest_total: int
    rss_mb: float
