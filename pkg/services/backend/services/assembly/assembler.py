"""
Assembled sets: one per maximal clique of the compatibility graph, up to
simultaneous block permutation.

Every clique vertex contributes its largest bounded subset. Vertices joined
by an edge on which only some cross pairs are admissible are resolved
together: a maximum independent set over the union of their classes, with a
conflict whenever a squared distance falls outside {2, ..., 2m}.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import networkx as nx
import structlog

from core.config import Settings, get_settings
from core.exceptions import VerificationError
from schemas.reports import (
    AssembledSetReport,
    PairCompatibility,
    SubsetCertificate,
    VerificationCertificate,
)
from services.classes import CandidateClass, enumerate_class, format_class
from services.exact import ScaledVector, conflict_pairs
from services.families import BoundedSubset, largest_bounded_subset, max_independent_set
from services.search import enumerate_addable_classes
from utils.memory_monitor import monitor_memory

from .graph import CompatibilityGraph, build_graph, maximal_cliques
from .orbits import clique_orbit_key
from .verification import verify_union

logger = structlog.get_logger()


@dataclass
class AssembledSet:
    n: int
    m: int
    clique: List[CandidateClass]
    components: List[BoundedSubset]
    points: List[ScaledVector] = field(default_factory=list)
    certificate: Optional[VerificationCertificate] = None

    @property
    def added(self) -> int:
        return len(self.points)

    @property
    def total_with_hamming(self) -> int:
        return self.n ** self.m + self.added

    def to_report(self) -> AssembledSetReport:
        return AssembledSetReport(
            clique=[format_class(X) for X in self.clique],
            components=[component.to_report() for component in self.components],
            added=self.added,
            total=self.total_with_hamming,
            verified=bool(self.certificate and self.certificate.passed),
            certificate=self.certificate,
        )


def _admissible_conflict(m: int, n: int):
    allowed = np.array([2 * h * n * n for h in range(1, m + 1)], dtype=np.int64)

    def is_conflict(values):
        return ~np.isin(np.asarray(values, dtype=np.int64), allowed)

    return is_conflict


def _joint_groups(G: CompatibilityGraph, clique: Sequence[int]) -> List[List[int]]:
    """Connected groups of clique vertices linked by some-only edges"""
    joint = nx.Graph()
    for a in clique:
        for b in clique:
            if a < b and G.compatibility(a, b) == PairCompatibility.SOME:
                joint.add_edge(a, b)
    return sorted((sorted(group) for group in nx.connected_components(joint)), key=lambda g: g[0])


def _resolve_jointly(
    G: CompatibilityGraph,
    group: Sequence[int],
    subsets: Dict[int, BoundedSubset],
    settings: Settings,
) -> Dict[int, BoundedSubset]:
    classes = [G.vertices[i] for i in group]
    full = sum(X.size for X in classes) <= settings.conflict_union_cap
    pools = [enumerate_class(X, settings.enumeration_cap) if full else subsets[i].points for i, X in zip(group, classes)]
    if not full:
        logger.warning("joint_union_over_cap", classes=[format_class(X) for X in classes], cap=settings.conflict_union_cap)

    union: List[ScaledVector] = []
    owner: List[int] = []
    for i, pool in zip(group, pools):
        union.extend(pool)
        owner.extend([i] * len(pool))
    index = {(owner[k], p.nums): k for k, p in enumerate(union)}
    hint = [index[(i, p.nums)] for i in group for p in subsets[i].points if (i, p.nums) in index]

    conflicts = conflict_pairs(union, _admissible_conflict(G.m, G.n), settings.threads)
    result = max_independent_set(len(union), conflicts, settings.clique_budget, settings.seed, hint)
    certificate = SubsetCertificate.BRUTE_FORCE_CLIQUE if result.optimal and full else SubsetCertificate.CLIQUE_MAXIMAL

    resolved = {}
    for i, X in zip(group, classes):
        chosen = sorted((union[k] for k in result.chosen if owner[k] == i), key=lambda p: p.nums)
        resolved[i] = BoundedSubset(
            cls=X,
            points=chosen,
            certificate=certificate,
            strategy="joint_solver",
            label=f"joint({len(group)} classes)",
            bound=result.size if result.optimal and full else None,
        )
    logger.info("joint_resolution", classes=len(group), union=len(union), chosen=result.size, optimal=result.optimal)
    return resolved


def distinct_cliques(G: CompatibilityGraph) -> List[Tuple[int, ...]]:
    """Maximal cliques, one per orbit under simultaneous block permutation"""
    seen = set()
    representatives = []
    for clique in maximal_cliques(G):
        key = clique_orbit_key([G.vertices[i] for i in clique])
        if key not in seen:
            seen.add(key)
            representatives.append(clique)
    return representatives


@monitor_memory('assemble')
def assemble(
    n: int,
    m: int,
    settings: Optional[Settings] = None,
    graph: Optional[CompatibilityGraph] = None,
) -> List[AssembledSet]:
    """
    Build and verify one assembled set per maximal clique orbit.

    Args:
        n: Alphabet size
        m: Word length
        settings: Optional settings override
        graph: Precomputed compatibility graph

    Returns:
        Assembled sets in clique order; empty when the Hamming set is maximal

    Raises:
        VerificationError: an assembled set fails verification
    """
    settings = settings or get_settings()
    G = graph if graph is not None else build_graph(n, m, enumerate_addable_classes(n, m, settings.threads))
    if not G.vertices:
        logger.info("hamming_maximal", n=n, m=m)
        return []

    memo: Dict[CandidateClass, BoundedSubset] = {}
    assembled = []
    for clique in distinct_cliques(G):
        subsets = {}
        for i in clique:
            X = G.vertices[i]
            if X not in memo:
                memo[X] = largest_bounded_subset(X, m, settings)
            subsets[i] = memo[X]
        for group in _joint_groups(G, clique):
            subsets.update(_resolve_jointly(G, group, subsets, settings))

        components = [subsets[i] for i in clique]
        points = sorted((p for component in components for p in component.points), key=lambda p: p.nums)
        certificate = verify_union(points, n, m, settings.verify, settings.sample_pairs, settings.seed, settings.threads)
        if not certificate.passed:
            witness = certificate.witness
            raise VerificationError(
                f"assembled set for clique {[format_class(G.vertices[i]) for i in clique]} failed at "
                f"squared distance {witness.sq_dist}",
                witness.first,
                witness.second,
                witness.sq_dist,
            )
        assembled.append(AssembledSet(
            n=n,
            m=m,
            clique=[G.vertices[i] for i in clique],
            components=components,
            points=points,
            certificate=certificate,
        ))
        logger.info("set_assembled", n=n, m=m, clique_size=len(clique), added=len(points))
    return assembled


def largest_total(n: int, m: int, settings: Optional[Settings] = None) -> Tuple[int, bool]:
    """
    Largest size of an assembled set together with the Hamming set.

    Returns:
        (total, maximal) where maximal means nothing can be added and total is n^m
    """
    sets = assemble(n, m, settings)
    if not sets:
        return n ** m, True
    return max(s.total_with_hamming for s in sets), False
