"""Intersecting families, three-level constructions and largest bounded subsets."""

from .frankl import (
    EkrBound,
    cross_pair_bound,
    cross_s_bound,
    ekr_bound,
    ekr_families,
    family_sum_bound,
    frankl_size,
    gen_frankl,
    intersection,
    min_intersection,
    scale_family,
    triangle_decomposition,
    triangle_product_bound,
)
from .three_level import (
    fixed_head_bound,
    fixed_head_levels,
    gen_fixed_head_family,
    gen_three_level_family,
    three_level_bound,
    three_level_levels,
)
from .solver import IndependentSet, max_independent_set
from .base_strategy import BaseSubsetStrategy, BoundedSubset
from .factory import SubsetStrategyFactory
from .subsets import largest_bounded_subset

__all__ = [
    # Intersecting families
    'EkrBound',
    'cross_pair_bound',
    'cross_s_bound',
    'ekr_bound',
    'ekr_families',
    'family_sum_bound',
    'frankl_size',
    'gen_frankl',
    'intersection',
    'min_intersection',
    'scale_family',
    'triangle_decomposition',
    'triangle_product_bound',
    # Three-level constructions
    'fixed_head_bound',
    'fixed_head_levels',
    'gen_fixed_head_family',
    'gen_three_level_family',
    'three_level_bound',
    'three_level_levels',
    # Solver
    'IndependentSet',
    'max_independent_set',
    # Strategies
    'BaseSubsetStrategy',
    'BoundedSubset',
    'SubsetStrategyFactory',
    'largest_bounded_subset',
]
