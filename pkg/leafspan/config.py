import logging
from functools import lru_cache

from pydantic import BaseSettings, validator


class Settings(BaseSettings):
    verify_lifts: bool = True
    oracle_max_vertices: int = 16
    oracle_max_edges: int = 24
    oracle_budget: int = 2_000_000
    oracle_cache_size: int = 256
    cubic_exhaustive_max_vertices: int = 12
    log_level: str = "WARNING"

    class Config:
        env_prefix = "LEAFSPAN_"
        env_file = ".env"

    @validator("log_level")
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if not isinstance(logging.getLevelName(value), int):
            raise ValueError(f"unknown log level {value!r}")
        return value

    @validator("oracle_max_vertices", "oracle_max_edges", "oracle_budget", "oracle_cache_size")
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be positive")
        return value


@lru_cache(maxsize=None)
def get_settings() -> Settings:
    """
    Returns the process wide settings, read once from the
    environment and the ``.env`` file.
    """
    return Settings()
