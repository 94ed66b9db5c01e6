"""Candidate-class algebra: block patterns, classes, modification and enumeration."""

from .patterns import (
    BlockPattern,
    CandidateClass,
    IndicatorProfile,
    canonical_element,
    class_of,
    distance_from_profile,
    is_addable,
    m_value,
    multinomial,
    sort_classes,
)
from .notation import format_block, format_class, parse_block, parse_class
from .modification import inverse_expansions, modify, modify_block, reduce, unmodify_block
from .enumeration import block_members, enumerate_class

__all__ = [
    # Types
    'BlockPattern',
    'CandidateClass',
    'IndicatorProfile',
    # Class statistics
    'canonical_element',
    'class_of',
    'distance_from_profile',
    'is_addable',
    'm_value',
    'multinomial',
    'sort_classes',
    # Notation
    'format_block',
    'format_class',
    'parse_block',
    'parse_class',
    # Modification
    'inverse_expansions',
    'modify',
    'modify_block',
    'reduce',
    'unmodify_block',
    # Enumeration
    'block_members',
    'enumerate_class',
]
