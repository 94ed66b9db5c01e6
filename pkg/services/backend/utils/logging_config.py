"""
structlog setup for the engine and the CLI.

Events go to stderr; stdout is reserved for command output (JSON, CSV,
tables) so results can be piped. JSON lines are rendered when stderr is not
a terminal.
"""

import logging
import os
import sys
from typing import List, Optional, Union

import structlog

LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _processors(json_output: bool) -> List:
    renderer = structlog.processors.JSONRenderer() if json_output else structlog.dev.ConsoleRenderer()
    return [
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.processors.CallsiteParameterAdder(
            parameters=[
                structlog.processors.CallsiteParameter.MODULE,
                structlog.processors.CallsiteParameter.FUNC_NAME,
            ]
        ),
        structlog.processors.dict_tracebacks,
        renderer,
    ]


def configure_logging(log_level: Union[int, str] = "WARNING", json_output: Optional[bool] = None) -> None:
    """
    Configure structlog for the engine.

    Args:
        log_level: Level name (DEBUG ... CRITICAL) or number
        json_output: Force JSON (True) or console (False) rendering
    """
    if isinstance(log_level, str):
        name = log_level.upper()
        log_level = getattr(logging, name) if name in LEVELS else logging.WARNING
    if json_output is None:
        json_output = not sys.stderr.isatty()

    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=log_level, force=True)
    structlog.configure(
        processors=_processors(json_output),
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )


# Library use without the CLI still logs to stderr at HDS_LOG_LEVEL
configure_logging(os.getenv("HDS_LOG_LEVEL", "WARNING"))

logger = structlog.get_logger()


def get_logger(name: Optional[str] = None) -> structlog.BoundLogger:
    log = structlog.get_logger()
    return log.bind(logger_name=name) if name else log
