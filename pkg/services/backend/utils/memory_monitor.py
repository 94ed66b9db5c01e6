"""
Resident-memory tracking for the heavy engine steps.

Materialising a class, assembling a clique and a full verification scan can
each allocate several GB for the larger frames (n = 19, m = 4). The
`monitor_memory` decorator records RSS around such a step and warns when the
step ends above its budget.
"""

import os
from functools import wraps
from typing import Callable, Dict, Optional

import psutil
import structlog

logger = structlog.get_logger()

MB = 1024 * 1024

# RSS budgets in MB, per step name
STEP_BUDGETS_MB: Dict[str, float] = {
    'assemble': 3000,
    'verify_union': 4000,
}
DEFAULT_BUDGET_MB = 2000


def get_memory_info() -> Dict[str, float]:
    """RSS of this process and memory still available on the machine, in MB"""
    process = psutil.Process(os.getpid())
    return {
        'rss_mb': process.memory_info().rss / MB,
        'available_mb': psutil.virtual_memory().available / MB,
    }


def log_memory_usage(step: str, **fields) -> Dict[str, float]:
    info = get_memory_info()
    logger.debug(
        "memory_usage",
        step=step,
        rss_mb=round(info['rss_mb'], 1),
        available_mb=round(info['available_mb'], 1),
        **fields,
    )
    return info


def monitor_memory(step: str, budget_mb: Optional[float] = None) -> Callable:
    """
    Decorator logging RSS before and after a step.

    Args:
        step: Step name used in log events and to look up the default budget
        budget_mb: RSS above which the step logs a warning; defaults to
            STEP_BUDGETS_MB[step]
    """
    budget = budget_mb if budget_mb is not None else STEP_BUDGETS_MB.get(step, DEFAULT_BUDGET_MB)

    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args, **kwargs):
            before = log_memory_usage(step, phase="start")
            try:
                result = func(*args, **kwargs)
            except MemoryError:
                logger.error("step_out_of_memory", step=step, rss_mb=round(get_memory_info()['rss_mb'], 1))
                raise
            after = log_memory_usage(step, phase="end")
            logger.debug("memory_delta", step=step, delta_mb=round(after['rss_mb'] - before['rss_mb'], 1))
            if after['rss_mb'] > budget:
                logger.warning("memory_budget_exceeded", step=step, rss_mb=round(after['rss_mb'], 1), budget_mb=budget)
            return result

        return wrapper

    return decorator
