"""Unit tests for settings."""

import pytest
from pydantic import ValidationError

from fibercone.config import Settings


class TestSettings:
    def test_defaults(self, monkeypatch):
        """Test the documented defaults."""
        for key in ("N_MAX", "WINDOW", "TRUNCATION", "PRIME", "LOG_LEVEL"):
            monkeypatch.delenv(f"FIBERCONE_{key}", raising=False)

        config = Settings(_env_file=None)

        assert config.n_max == 40
        assert config.window == 3
        assert config.truncation == 10
        assert config.guard == 2
        assert config.prime == 2147483647
        assert config.log_level == "WARNING"

    def test_environment_overrides(self, monkeypatch):
        """Test that FIBERCONE_* variables are read."""
        monkeypatch.setenv("FIBERCONE_N_MAX", "25")
        monkeypatch.setenv("FIBERCONE_LOG_LEVEL", "debug")

        config = Settings(_env_file=None)

        assert config.n_max == 25
        assert config.log_level == "DEBUG"

    def test_unknown_log_level(self):
        """Test that a bogus level name fails validation."""
        with pytest.raises(ValidationError):
            Settings(_env_file=None, log_level="LOUD")

    def test_policy(self):
        """Test that policy() carries window and n_max."""
        policy = Settings(_env_file=None, window=4, n_max=30).policy()

        assert policy.window == 4
        assert policy.n_max == 30

    def test_small_truncation_rejected(self):
        """Test the lower bound on the truncation order."""
        with pytest.raises(ValidationError):
            Settings(_env_file=None, truncation=1)
