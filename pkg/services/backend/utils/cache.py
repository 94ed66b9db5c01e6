"""
File-backed cache for classification results.

Classifying a pair (n, m) can take minutes for the larger frames, so results
are cached as JSON files under the cache directory. Keys combine the service
name, a hash of the content (n, m, ...) and a hash of the parameters, where the
parameters always include a hash of the engine sources: editing any module
under services/ invalidates every entry.
"""

import hashlib
import json
from datetime import datetime, timezone
from functools import wraps
from pathlib import Path
from typing import Optional, Dict, Any, Union

import structlog

logger = structlog.get_logger(__name__)

_SERVICES_DIR = Path(__file__).resolve().parent.parent / "services"

_code_version: Optional[str] = None


def code_version_hash() -> str:
    """Hash of every engine source file, used to version cache entries"""
    global _code_version
    if _code_version is None:
        digest = hashlib.sha256()
        for path in sorted(_SERVICES_DIR.rglob("*.py")):
            digest.update(str(path.relative_to(_SERVICES_DIR)).encode())
            digest.update(path.read_bytes())
        _code_version = digest.hexdigest()[:16]
    return _code_version


class ResultCache:
    """JSON file cache keyed by content and parameter hashes."""

    def __init__(self, cache_dir: Union[str, Path], enabled: bool = True):
        self.cache_dir = Path(cache_dir)
        self.enabled = enabled
        if self.enabled:
            try:
                self.cache_dir.mkdir(parents=True, exist_ok=True)
            except OSError as e:
                logger.warning("cache_dir_unavailable", cache_dir=str(self.cache_dir), error=str(e))
                self.enabled = False

    def _generate_cache_key(self, service: str, content_hash: str, params_hash: str) -> str:
        """Generate consistent cache key."""
        return f"{service}-{content_hash}-{params_hash}"

    def _hash_content(self, content: Union[str, bytes, Dict[str, Any]]) -> str:
        """Generate SHA256 hash of content for cache key."""
        if isinstance(content, dict):
            content_str = json.dumps(content, sort_keys=True)
        elif isinstance(content, bytes):
            content_str = content.hex()
        else:
            content_str = str(content)

        return hashlib.sha256(content_str.encode()).hexdigest()[:16]

    def _hash_params(self, params: Dict[str, Any]) -> str:
        """Generate hash of parameters (plus code version) for cache key."""
        versioned = {**params, "_code_version": code_version_hash()}
        return hashlib.sha256(json.dumps(versioned, sort_keys=True).encode()).hexdigest()[:16]

    def _path_for(self, service: str, content, params) -> Path:
        key = self._generate_cache_key(service, self._hash_content(content), self._hash_params(params or {}))
        return self.cache_dir / f"{key}.json"

    def get(self, service: str, content: Union[str, bytes, Dict[str, Any]],
            params: Dict[str, Any] = None) -> Optional[Dict[str, Any]]:
        """
        Get cached result.

        Args:
            service: Service name (classify, section6, ...)
            content: Content being processed, usually {"n": .., "m": ..}
            params: Parameters that influence the result

        Returns:
            Cached result dict or None if not found
        """
        if not self.enabled:
            return None

        path = self._path_for(service, content, params)
        try:
            if not path.exists():
                logger.debug("cache_miss", service=service, cache_key=path.stem)
                return None
            cached = json.loads(path.read_text())
            logger.info("cache_hit", service=service, cache_key=path.stem, cached_at=cached.get("cached_at"))
            return cached.get("data")
        except (OSError, ValueError) as e:
            logger.warning("cache_get_error", service=service, error=str(e))
            return None

    def set(self, service: str, content: Union[str, bytes, Dict[str, Any]],
            result: Dict[str, Any], params: Dict[str, Any] = None) -> bool:
        """
        Cache a result.

        Args:
            service: Service name
            content: Content that was processed
            result: JSON-serialisable result
            params: Parameters that influenced the result

        Returns:
            True if cached successfully, False otherwise
        """
        if not self.enabled:
            return False

        path = self._path_for(service, content, params)
        try:
            payload = {
                "data": result,
                "service": service,
                "cached_at": datetime.now(timezone.utc).isoformat(),
                "code_version": code_version_hash(),
            }
            tmp = path.with_suffix(".tmp")
            tmp.write_text(json.dumps(payload, sort_keys=True))
            tmp.replace(path)
            logger.info("cache_stored", service=service, cache_key=path.stem, size_bytes=path.stat().st_size)
            return True
        except (OSError, TypeError, ValueError) as e:
            logger.warning("cache_set_error", service=service, error=str(e))
            return False

    def invalidate(self, service: str, content: Union[str, bytes, Dict[str, Any]],
                   params: Dict[str, Any] = None) -> bool:
        """
        Invalidate a cached result.

        Returns:
            True if an entry was removed
        """
        if not self.enabled:
            return False

        path = self._path_for(service, content, params)
        try:
            existed = path.exists()
            if existed:
                path.unlink()
            logger.info("cache_invalidated", service=service, cache_key=path.stem, was_cached=existed)
            return existed
        except OSError as e:
            logger.warning("cache_invalidate_error", service=service, error=str(e))
            return False

    def clear(self, service: Optional[str] = None) -> int:
        """Remove all entries, or all entries of one service. Returns the count."""
        if not self.enabled:
            return 0
        pattern = f"{service}-*.json" if service else "*.json"
        removed = 0
        for path in self.cache_dir.glob(pattern):
            try:
                path.unlink()
                removed += 1
            except OSError as e:
                logger.warning("cache_clear_error", path=str(path), error=str(e))
        logger.info("cache_cleared", service=service, removed=removed)
        return removed

    def stats(self) -> Dict[str, Any]:
        """Entry counts and sizes per service."""
        if not self.enabled:
            return {"enabled": False}
        per_service: Dict[str, Dict[str, int]] = {}
        for path in self.cache_dir.glob("*.json"):
            service = path.stem.split("-", 1)[0]
            entry = per_service.setdefault(service, {"entries": 0, "bytes": 0})
            entry["entries"] += 1
            entry["bytes"] += path.stat().st_size
        return {
            "enabled": True,
            "cache_dir": str(self.cache_dir),
            "code_version": code_version_hash(),
            "services": per_service,
        }


def cached_result(cache: Optional[ResultCache], service: str):
    """
    Decorator caching a function whose keyword arguments identify the result.

    Usage:
        @cached_result(cache, 'classify')
        def run(n, m):
            return report_dict
    """
    def decorator(func):
        @wraps(func)
        def wrapper(**kwargs):
            if cache is None:
                return func(**kwargs)

            cached = cache.get(service, kwargs)
            if cached is not None:
                return cached

            result = func(**kwargs)
            if result is not None:
                cache.set(service, kwargs, result)
            return result

        return wrapper
    return decorator
