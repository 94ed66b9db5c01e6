"""
Runtime settings for the engine.

Values come from HDS_* environment variables (a local .env is loaded by the
CLI before settings are built) and fall back to the defaults below.
"""
import os
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, field_validator

ENV_PREFIX = "HDS_"

DEFAULT_CACHE_DIR = Path.home() / ".cache" / "hamming-distance-sets"


def _env(name: str, default: Optional[str] = None) -> Optional[str]:
    return os.getenv(f"{ENV_PREFIX}{name}", default)


def _env_flag(name: str) -> bool:
    return (_env(name, "") or "").strip().lower() in {"1", "true", "yes", "on"}


class Settings(BaseModel):
    """Engine settings shared by the CLI and the services"""

    cache_dir: Path = DEFAULT_CACHE_DIR
    use_cache: bool = True
    verify: str = Field(default="fast", pattern="^(fast|full)$")
    threads: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)
    clique_budget: float = Field(default=30.0, gt=0)
    enumeration_cap: int = Field(default=1_000_000, ge=1)
    exact_clique_cap: int = Field(default=150, ge=1)
    budgeted_clique_cap: int = Field(default=500, ge=1)
    conflict_union_cap: int = Field(default=2000, ge=1)
    sample_pairs: int = Field(default=1_000_000, ge=1)
    seed: int = 0
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v):
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level: {v}")
        return level

    @field_validator("budgeted_clique_cap")
    @classmethod
    def validate_caps(cls, v, info):
        if "exact_clique_cap" in info.data and v < info.data["exact_clique_cap"]:
            raise ValueError("Budgeted clique cap must not be below the exact cap")
        return v

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from HDS_* variables, ignoring unset ones"""
        values = {
            "cache_dir": _env("CACHE_DIR"),
            "verify": _env("VERIFY"),
            "threads": _env("THREADS"),
            "clique_budget": _env("CLIQUE_BUDGET"),
            "enumeration_cap": _env("ENUMERATION_CAP"),
            "exact_clique_cap": _env("EXACT_CLIQUE_CAP"),
            "budgeted_clique_cap": _env("BUDGETED_CLIQUE_CAP"),
            "conflict_union_cap": _env("CONFLICT_UNION_CAP"),
            "sample_pairs": _env("SAMPLE_PAIRS"),
            "seed": _env("SEED"),
            "log_level": _env("LOG_LEVEL"),
        }
        values = {key: value for key, value in values.items() if value is not None}
        if _env_flag("NO_CACHE"):
            values["use_cache"] = False
        return cls(**values)


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Process-wide settings, built from the environment on first use"""
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings


def reset_settings() -> None:
    """Forget cached settings (tests change the environment between cases)"""
    global _settings
    _settings = None


def use_settings(settings: Settings) -> Settings:
    """Install settings built elsewhere (the CLI merges its flags over the environment)"""
    global _settings
    _settings = settings
    return settings
