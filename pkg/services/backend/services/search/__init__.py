"""Addability search: reduced profiles, addable classes and the maximality frontier."""

from .profiles import (
    FrontierReport,
    Profile,
    enumerate_profiles,
    hamming_is_maximal,
    lift_class,
    max_nonmaximal_n,
    min_m_bruteforce,
    min_m_for,
    verify_frontier,
)
from .addable import (
    AddableBreakdown,
    addable_breakdown,
    block_patterns,
    direct_addable_search,
    enumerate_addable_classes,
    realize_profile,
)

__all__ = [
    'FrontierReport',
    'Profile',
    'enumerate_profiles',
    'hamming_is_maximal',
    'lift_class',
    'max_nonmaximal_n',
    'min_m_bruteforce',
    'min_m_for',
    'verify_frontier',
    'AddableBreakdown',
    'addable_breakdown',
    'block_patterns',
    'direct_addable_search',
    'enumerate_addable_classes',
    'realize_profile',
]
