"""
Factory for largest-bounded-subset strategies.

Strategies are tried in registry order; the first one whose applies()
accepts the class builds the subset.
"""

from typing import Dict, List, Optional, Type

import structlog

from core.config import Settings

from .base_strategy import BaseSubsetStrategy
from .strategies import (
    ExactSolverStrategy,
    IntersectingFamilyStrategy,
    ProductStrategy,
    ThreeLevelFamilyStrategy,
    ThreeLevelSparseStrategy,
    WholeClassStrategy,
)

logger = structlog.get_logger()


class SubsetStrategyFactory:
    """Factory for creating subset strategies."""

    # Registry of available strategies, in the order they are tried
    _strategies: Dict[str, Type[BaseSubsetStrategy]] = {
        'whole_class': WholeClassStrategy,
        'intersecting_family': IntersectingFamilyStrategy,
        'three_level_family': ThreeLevelFamilyStrategy,
        'three_level_sparse': ThreeLevelSparseStrategy,
        'product': ProductStrategy,
        'exact_solver': ExactSolverStrategy,
    }

    @classmethod
    def create_strategy(cls, name: str, settings: Optional[Settings] = None) -> BaseSubsetStrategy:
        """
        Create a strategy instance.

        Args:
            name: Name of the strategy
            settings: Optional settings (defaults to the process settings)

        Returns:
            Strategy instance

        Raises:
            ValueError: If the strategy name is not recognized
        """
        if name not in cls._strategies:
            raise ValueError(
                f"Unknown strategy: {name}. "
                f"Available strategies: {list(cls._strategies.keys())}"
            )
        return cls._strategies[name](settings)

    @classmethod
    def register_strategy(cls, name: str, strategy_class: Type[BaseSubsetStrategy], before: Optional[str] = None):
        """
        Register a new strategy.

        Args:
            name: Name for the strategy
            strategy_class: Strategy class (must inherit from BaseSubsetStrategy)
            before: Existing strategy the new one is tried ahead of; appended
                before the exact solver when omitted
        """
        if not issubclass(strategy_class, BaseSubsetStrategy):
            raise TypeError(f"{strategy_class} must inherit from BaseSubsetStrategy")

        before = before or 'exact_solver'
        ordered = {key: value for key, value in cls._strategies.items() if key != name}
        rebuilt: Dict[str, Type[BaseSubsetStrategy]] = {}
        for key, value in ordered.items():
            if key == before:
                rebuilt[name] = strategy_class
            rebuilt[key] = value
        if name not in rebuilt:
            rebuilt[name] = strategy_class
        cls._strategies = rebuilt

        logger.info("strategy_registered", name=name, before=before)

    @classmethod
    def unregister_strategy(cls, name: str):
        cls._strategies = {key: value for key, value in cls._strategies.items() if key != name}

    @classmethod
    def get_available_strategies(cls) -> List[str]:
        return list(cls._strategies.keys())

    @classmethod
    def ordered(cls, settings: Optional[Settings] = None) -> List[BaseSubsetStrategy]:
        """Instances of every registered strategy, in trial order"""
        return [strategy_class(settings) for strategy_class in cls._strategies.values()]
