"""Configuration management using pydantic-settings."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

if TYPE_CHECKING:
    from fibercone.invariants.models import StabilizationPolicy

# 2^31 - 1
DEFAULT_PRIME = 2147483647


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables or .env file."""

    model_config = SettingsConfigDict(
        env_prefix="FIBERCONE_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Stabilization of "for all large n" statements
    n_max: int = Field(40, description="Largest index explored when stabilizing", ge=5)
    window: int = Field(
        3, description="Consecutive equal values required to accept a limit", ge=2
    )

    # Truncated local rings
    truncation: int = Field(10, description="Default truncation order N", ge=2)
    guard: int = Field(2, description="Certification guard: ord_m must be <= N - guard", ge=1)
    doubling_budget: int = Field(
        4, description="Maximum number of precision doublings", ge=0, le=16
    )
    prime: int = Field(
        DEFAULT_PRIME, description="Characteristic used for prime-field cross-checks", ge=2
    )

    log_level: str = Field("WARNING", description="Root log level for the CLI")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Ensure log level is a standard logging level name."""
        level = v.upper()
        if level not in logging.getLevelNamesMapping():
            raise ValueError(f"Unknown log level: {v}")
        return level

    def policy(self) -> StabilizationPolicy:
        """Stabilization policy built from window and n_max."""
        from fibercone.invariants.models import StabilizationPolicy

        return StabilizationPolicy(window=self.window, n_max=self.n_max)


# Global settings instance
settings = Settings()
