"""
Tests for settings and the exception hierarchy
"""
from pathlib import Path

import pytest
from pydantic import ValidationError

from core.config import Settings, get_settings, reset_settings, use_settings
from core.exceptions import ClassSizeError, DimensionError, DomainError, HammingSearchError, VerificationError


@pytest.mark.unit
class TestSettings:
    """Test suite for Settings"""

    def test_defaults(self):
        """Test defaults without HDS_* variables"""
        settings = Settings.from_env()
        assert settings.verify == "fast"
        assert settings.use_cache
        assert settings.threads >= 1
        assert settings.log_level == "WARNING"

    def test_from_env(self, monkeypatch):
        """Test HDS_* variables override defaults"""
        monkeypatch.setenv("HDS_VERIFY", "full")
        monkeypatch.setenv("HDS_THREADS", "3")
        monkeypatch.setenv("HDS_CACHE_DIR", "/tmp/hds")
        monkeypatch.setenv("HDS_NO_CACHE", "yes")
        monkeypatch.setenv("HDS_LOG_LEVEL", "debug")
        settings = Settings.from_env()
        assert settings.verify == "full"
        assert settings.threads == 3
        assert settings.cache_dir == Path("/tmp/hds")
        assert not settings.use_cache
        assert settings.log_level == "DEBUG"

    @pytest.mark.parametrize("name,value", [
        ("HDS_VERIFY", "sometimes"),
        ("HDS_THREADS", "0"),
        ("HDS_LOG_LEVEL", "LOUD"),
        ("HDS_CLIQUE_BUDGET", "-1"),
    ])
    def test_invalid(self, monkeypatch, name, value):
        """Test invalid values are rejected"""
        monkeypatch.setenv(name, value)
        with pytest.raises(ValidationError):
            Settings.from_env()

    def test_caps_ordered(self):
        """Test the budgeted cap may not undercut the exact cap"""
        with pytest.raises(ValidationError):
            Settings(exact_clique_cap=200, budgeted_clique_cap=100)

    def test_process_settings(self):
        """Test installing and resetting the process settings"""
        custom = use_settings(Settings(threads=2))
        assert get_settings() is custom
        reset_settings()
        assert get_settings() is not custom


@pytest.mark.unit
class TestExceptions:
    """Test suite for the exception hierarchy"""

    def test_domain_errors_are_value_errors(self):
        """Test builtin-compatible catching"""
        assert issubclass(DimensionError, DomainError)
        assert issubclass(DomainError, ValueError)
        assert issubclass(DomainError, HammingSearchError)

    def test_class_size_error(self):
        """Test the count and cap are carried"""
        error = ClassSizeError(84, 10)
        assert error.count == 84
        assert "84" in str(error)

    def test_verification_error(self):
        """Test the witness pair is carried"""
        error = VerificationError("bad pair", (1, 2), (3, 4), "3")
        assert error.first == [1, 2]
        assert error.second == [3, 4]
        assert error.sq_dist == "3"
