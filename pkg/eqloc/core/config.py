"""Engine configuration settings."""

from functools import lru_cache
from typing import Any

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Engine settings loaded from environment variables (prefix ``EQLOC_``)."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="EQLOC_",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    APP_NAME: str = "eqloc"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"

    # Lattice-point oracle
    ORACLE_MAX_POINTS: int = 1_000_000

    # Fan completeness sampling (dim <= 3)
    COMPLETENESS_SAMPLES: int = 256
    RANDOM_SEED: int = 20240101

    # Per-fixed-point work is fanned out over this many threads (1 = sequential)
    MAX_WORKERS: int = 1

    # `check` subcommand
    CHECK_RANDOM_CLASSES: int = 100

    # CLI output
    DEFAULT_FORMAT: str = "text"

    @field_validator("DEFAULT_FORMAT", mode="before")
    @classmethod
    def validate_format(cls, v: Any) -> Any:
        if isinstance(v, str):
            v = v.strip().lower()
            if v not in ("text", "json"):
                raise ValueError("DEFAULT_FORMAT must be 'text' or 'json'")
        return v

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def validate_log_level(cls, v: Any) -> Any:
        if isinstance(v, str):
            return v.strip().upper()
        return v


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


settings = get_settings()
