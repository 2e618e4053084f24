"""Configuration management for the decomposable-polynomial counter."""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Tuning knobs loaded from ``DECOMP_*`` environment variables or ``.env``.

    None of these change a computed count; they only bound or speed up the
    brute-force oracles and select logging output.
    """

    # Oracles
    enumeration_budget: int = Field(default=10**8, ge=1)
    oracle_workers: int = Field(default=1, ge=1)
    oracle_shift_reduction: bool = True

    # Finite-field demos
    default_prime: int = Field(default=5, ge=2)

    # Table
    table_min: int = Field(default=1, ge=1)
    table_max: int = Field(default=50, ge=1)

    # Logging
    log_level: str = "WARNING"
    log_format: Literal["json", "console"] = "console"

    class Config:
        env_prefix = "DECOMP_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = False


@lru_cache
def get_settings() -> Settings:
    """Get cached application settings."""
    return Settings()
