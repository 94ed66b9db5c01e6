"""Cache, logging, memory and thread-pool helpers shared by the services and the CLI."""

from .cache import ResultCache, cached_result, code_version_hash
from .logging_config import configure_logging, get_logger, logger
from .memory_monitor import get_memory_info, log_memory_usage, monitor_memory
from .parallel import chunked, map_chunks, map_items

__all__ = [
    # Cache
    'ResultCache',
    'cached_result',
    'code_version_hash',
    # Logging
    'configure_logging',
    'get_logger',
    'logger',
    # Memory
    'get_memory_info',
    'log_memory_usage',
    'monitor_memory',
    # Thread pool
    'chunked',
    'map_chunks',
    'map_items',
]
