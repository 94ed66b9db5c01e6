"""Compatibility graph, maximal cliques, assembled sets and their verification."""

from .graph import (
    CompatibilityGraph,
    build_graph,
    describe_clique,
    is_admissible,
    maximal_cliques,
    pair_compatible,
    pair_max_sq,
    pair_min_sq,
)
from .orbits import clique_orbit_key
from .verification import hamming_pair_counts, verify_union
from .assembler import AssembledSet, assemble, distinct_cliques, largest_total
from .classification import class_entry, classify, enumerate_report
from .reference import KNOWN_DEVIATIONS, REFERENCE_LARGEST, REFERENCE_ROWS, compare_report, deviation_for, inconsistent_rows, load_reference, rows_for
from .report import read_points, rows_from_csv, rows_to_csv, table_rows, to_json, write_points

__all__ = [
    # Graph
    'CompatibilityGraph',
    'build_graph',
    'describe_clique',
    'is_admissible',
    'maximal_cliques',
    'pair_compatible',
    'pair_max_sq',
    'pair_min_sq',
    # Orbits
    'clique_orbit_key',
    # Verification
    'hamming_pair_counts',
    'verify_union',
    # Assembly
    'AssembledSet',
    'assemble',
    'class_entry',
    'classify',
    'enumerate_report',
    'distinct_cliques',
    'largest_total',
    # Reference rows
    'KNOWN_DEVIATIONS',
    'REFERENCE_LARGEST',
    'REFERENCE_ROWS',
    'compare_report',
    'deviation_for',
    'inconsistent_rows',
    'load_reference',
    'rows_for',
    # Output
    'read_points',
    'rows_from_csv',
    'rows_to_csv',
    'table_rows',
    'to_json',
    'write_points',
]
