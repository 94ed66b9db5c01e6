"""
Classification of the maximal sets (two points or more) that extend the
embedded H(n, 2) into one extra dimension while keeping two distances.
"""
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import networkx as nx
import structlog
from sympy import Matrix, Rational, sqrt

from core.exceptions import DomainError
from schemas.reports import ExtendedReport, ExtendedSetReport
from services.exact import QuadraticValue, RootPoint, quad_sq_dist

from .candidates import ALLOWED, ExtendedCandidate, admissible_candidates, embedded_hamming_points, to_model

logger = structlog.get_logger()

FAMILY_THRESHOLD = 16


@dataclass
class ExtendedSet:
    """A maximal clique of candidate points with the families it draws from"""
    n: int
    points: List[RootPoint]
    usage: Dict[str, Tuple[int, int]]  # label -> (used, family size)

    @property
    def size(self) -> int:
        return len(self.points)

    def labels(self) -> List[str]:
        """Family labels; a full Y with sign s next to a full Z with sign -s reads as X"""
        full = {label for label, (used, total) in self.usage.items() if used == total}
        labels = []
        for label in sorted(self.usage):
            used, total = self.usage[label]
            kind, rest = label[0], label[1:]
            if kind == "Z" and rest.endswith(("+", "-")):
                partner = "Y" + rest[:-1] + ("-" if rest.endswith("+") else "+")
                if label in full and partner in full:
                    continue
            if kind == "Y" and rest.endswith(("+", "-")):
                partner = "Z" + rest[:-1] + ("-" if rest.endswith("+") else "+")
                if label in full and partner in full:
                    labels.append("X" + rest)
                    continue
            labels.append(label if used == total else f"{label}[{used}/{total}]")
        return labels


def _rational_coordinates(point: RootPoint) -> List[Fraction]:
    n = point.vector.n
    return [Fraction(v, n) for v in point.vector.nums]


def affine_rank(points: Sequence[RootPoint]) -> int:
    """
    Dimension of the affine span, computed exactly.

    Extra coordinates sharing one square-free radicand are scaled out so the
    rank is taken over the rationals; otherwise sympy works with the radicals.
    """
    if not points:
        return -1
    extras = [QuadraticValue.of(0, p.sign, p.beta_sq) for p in points]
    radicands = {value.r for value in extras if not value.is_rational}
    mixed = bool(radicands) and any(value.is_rational and value.a != 0 for value in extras)
    symbolic = len(radicands) > 1 or mixed

    rows = []
    for p, value in zip(points, extras):
        coordinates = [Rational(c.numerator, c.denominator) for c in _rational_coordinates(p)]
        if symbolic:
            coordinates.append(p.sign * sqrt(Rational(p.beta_sq.numerator, p.beta_sq.denominator)))
        else:
            scaled = value.a if value.is_rational else value.b
            coordinates.append(Rational(scaled.numerator, scaled.denominator))
        rows.append(coordinates)
    origin = rows[0]
    if len(rows) == 1:
        return 0
    return Matrix([[a - b for a, b in zip(row, origin)] for row in rows[1:]]).rank()


def candidate_graph(candidates: Sequence[ExtendedCandidate]) -> Tuple[nx.Graph, List[RootPoint], List[ExtendedCandidate]]:
    """Points of all candidates, joined when their squared distance is 2 or 4"""
    points: List[RootPoint] = []
    owners: List[ExtendedCandidate] = []
    for candidate in candidates:
        points.extend(candidate.members)
        owners.extend([candidate] * candidate.size)
    G = nx.Graph()
    G.add_nodes_from(range(len(points)))
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            value = quad_sq_dist(points[i], points[j])
            if value.is_rational and value.a in ALLOWED:
                G.add_edge(i, j)
    return G, points, owners


def maximal_extended_sets(n: int) -> List[ExtendedSet]:
    """All maximal cliques of at least two candidate points, in a fixed order"""
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    candidates = admissible_candidates(n)
    G, points, owners = candidate_graph(candidates)
    cliques = sorted((tuple(sorted(c)) for c in nx.find_cliques(G) if len(c) >= 2), key=lambda c: (-len(c), c))
    sets = []
    for clique in cliques:
        used = Counter(owners[i].label for i in clique)
        sizes = {owners[i].label: owners[i].size for i in clique}
        sets.append(ExtendedSet(
            n=n,
            points=[points[i] for i in clique],
            usage={label: (used[label], sizes[label]) for label in used},
        ))
    logger.info("extended_cliques", n=n, points=len(points), cliques=len(sets))
    return sets


def _group_key(s: ExtendedSet) -> Tuple:
    families = sorted({(label[0], int(label[1:].rstrip("+-"))) for label in s.usage})
    return (-s.size, tuple(families))


def classify_extended(n: int, with_rank: bool = True) -> ExtendedReport:
    """
    Maximal addable sets for the one-dimension extension of H(n, 2).

    Sets are grouped by the (kind, k) families they use and by size. A group
    with more than FAMILY_THRESHOLD sets is reported once, with its count and
    one representative.

    Args:
        n: Alphabet size
        with_rank: Compute the affine rank of each reported set joined with H(n, 2)

    Returns:
        ExtendedReport
    """
    hamming = embedded_hamming_points(n) if with_rank else []
    groups: Dict[Tuple, List[ExtendedSet]] = defaultdict(list)
    for s in maximal_extended_sets(n):
        groups[_group_key(s)].append(s)

    reports = []
    for key in sorted(groups):
        members = groups[key]
        if len(members) > FAMILY_THRESHOLD:
            labels = sorted({label for s in members for label in s.usage})
            shown = [(members[0], labels, len(members))]
            logger.info("extended_family", n=n, labels=labels, size=members[0].size, count=len(members))
        else:
            shown = [(s, s.labels(), 1) for s in members]
        for s, labels, count in shown:
            reports.append(ExtendedSetReport(
                labels=labels,
                size=s.size,
                count=count,
                representative=[to_model(p).model_dump() for p in s.points],
                affine_rank=affine_rank(hamming + s.points) if with_rank else None,
            ))
    return ExtendedReport(n=n, sets=reports)
