"""
The compatibility graph on addable classes.

Two classes are joined when their canonical elements sit at an admissible
squared distance (an even integer in [2, 2m]). Canonical elements realise the
smallest cross distance and the anti-sorted pairing the largest; all cross
distances differ by even integers, so both ends in range means every cross
pair is admissible.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import structlog

from core.exceptions import DimensionError
from schemas.reports import PairCompatibility
from services.classes import CandidateClass, canonical_element, format_class
from services.exact import sq_dist
from services.search import enumerate_addable_classes

logger = structlog.get_logger()


def is_admissible(value: Fraction, m: int) -> bool:
    return value.denominator == 1 and value.numerator % 2 == 0 and 2 <= value <= 2 * m


def pair_max_sq(X: CandidateClass, Y: CandidateClass) -> Fraction:
    """Largest squared distance over X x Y: pair each block descending against ascending"""
    total = 0
    for bx, by in zip(X.blocks, Y.blocks):
        total += sum((a - b) ** 2 for a, b in zip(bx.numerators(), reversed(by.numerators())))
    return Fraction(total, X.n * X.n)


def pair_min_sq(X: CandidateClass, Y: CandidateClass) -> Fraction:
    return sq_dist(canonical_element(X), canonical_element(Y)).value


def pair_compatible(X: CandidateClass, Y: CandidateClass, m: Optional[int] = None) -> PairCompatibility:
    """
    How many cross pairs of X and Y are at an admissible distance.

    Returns:
        SOME when the canonical elements are admissible, ALL when the largest
        cross distance is admissible too, NONE otherwise

    Raises:
        DimensionError: classes over different (n, m)
    """
    if X.n != Y.n or X.m != Y.m:
        raise DimensionError(f"classes over (n={X.n}, m={X.m}) and (n={Y.n}, m={Y.m})")
    m = X.m if m is None else m
    if not is_admissible(pair_min_sq(X, Y), m):
        return PairCompatibility.NONE
    if is_admissible(pair_max_sq(X, Y), m):
        return PairCompatibility.ALL
    return PairCompatibility.SOME


@dataclass
class CompatibilityGraph:
    n: int
    m: int
    vertices: List[CandidateClass] = field(default_factory=list)
    edges: Dict[Tuple[int, int], PairCompatibility] = field(default_factory=dict)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self.vertices)))
        graph.add_edges_from(self.edges)
        return graph

    def compatibility(self, i: int, j: int) -> PairCompatibility:
        return self.edges.get((min(i, j), max(i, j)), PairCompatibility.NONE)

    def neighbors(self, i: int) -> List[int]:
        return sorted(b if a == i else a for a, b in self.edges if i in (a, b))


def build_graph(n: int, m: int, classes: Optional[Sequence[CandidateClass]] = None, threads: int = 1) -> CompatibilityGraph:
    """
    Graph over all addable classes (block orders are distinct vertices).

    Args:
        n: Alphabet size
        m: Word length
        classes: Precomputed vertex list; enumerated when omitted
        threads: Worker threads for the class enumeration
    """
    vertices = list(classes) if classes is not None else enumerate_addable_classes(n, m, threads)
    edges = {}
    for i, j in combinations(range(len(vertices)), 2):
        status = pair_compatible(vertices[i], vertices[j], m)
        if status != PairCompatibility.NONE:
            edges[(i, j)] = status
    some_only = sum(1 for status in edges.values() if status == PairCompatibility.SOME)
    logger.info("graph_built", n=n, m=m, vertices=len(vertices), edges=len(edges), some_only=some_only)
    return CompatibilityGraph(n=n, m=m, vertices=vertices, edges=edges)


def maximal_cliques(G: CompatibilityGraph) -> List[Tuple[int, ...]]:
    """All maximal cliques, largest first, then lexicographic"""
    if not G.vertices:
        return []
    cliques = [tuple(sorted(clique)) for clique in nx.find_cliques(G.to_networkx())]
    return sorted(cliques, key=lambda clique: (-len(clique), clique))


def describe_clique(G: CompatibilityGraph, clique: Sequence[int]) -> List[str]:
    return [format_class(G.vertices[i]) for i in clique]
