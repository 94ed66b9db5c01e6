"""
Largest subset of a class with pairwise squared distances at most 2m.
"""
from typing import Optional

import structlog

from core.config import Settings, get_settings
from core.exceptions import PreconditionError
from schemas.reports import SubsetCertificate
from services.classes import CandidateClass, format_class, is_addable, m_value

from .base_strategy import BoundedSubset
from .factory import SubsetStrategyFactory
from .strategies import ExactSolverStrategy

logger = structlog.get_logger()


def largest_bounded_subset(X: CandidateClass, m: Optional[int] = None, settings: Optional[Settings] = None) -> BoundedSubset:
    """
    Largest subset of X whose pairwise squared distances are at most 2m.

    The first applicable strategy builds the subset. Constructions on classes
    within the exact solver cap are re-solved exactly and upgraded to an
    optimality certificate when the solver agrees.

    Args:
        X: Addable class
        m: Word length (defaults to X.m)
        settings: Optional settings override

    Returns:
        BoundedSubset, validated pairwise

    Raises:
        PreconditionError: X is not addable
        UnsupportedCaseError: no construction applies and X is too large to solve
        VerificationError: a construction misses its cited bound or the bound 2m
    """
    m = X.m if m is None else m
    settings = settings or get_settings()
    if not is_addable(X):
        raise PreconditionError(f"{format_class(X)} is not addable (M={m_value(X)})")

    subset = None
    for strategy in SubsetStrategyFactory.ordered(settings):
        if strategy.applies(X, m):
            subset = strategy.build(X, m)
            strategy.check_bound(subset)
            break

    if subset.certificate == SubsetCertificate.EKR_CONSTRUCTION and X.size <= settings.exact_clique_cap:
        solved = ExactSolverStrategy(settings).solve(X, m, hint_points=subset.points)
        if solved.certificate == SubsetCertificate.BRUTE_FORCE_CLIQUE:
            if solved.size > subset.size:
                logger.warning(
                    "construction_below_optimum",
                    notation=format_class(X),
                    construction=subset.size,
                    optimum=solved.size,
                )
                subset = solved
            else:
                subset.certificate = SubsetCertificate.BRUTE_FORCE_CLIQUE

    strategy_for_validation = SubsetStrategyFactory.create_strategy(subset.strategy, settings)
    strategy_for_validation.validate(subset, m)
    logger.info(
        "bounded_subset_selected",
        notation=format_class(X),
        size=subset.size,
        certificate=subset.certificate.value,
        label=subset.label,
    )
    return subset
