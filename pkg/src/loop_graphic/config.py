"""Application configuration using Pydantic Settings."""

from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from LOOP_GRAPHIC_* environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="LOOP_GRAPHIC_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    oracle_max_n: int = Field(
        default=5,
        ge=0,
        description="Largest vertex count the brute-force oracle accepts",
    )
    oracle_timeout: float = Field(
        default=30.0,
        gt=0,
        description="Wall-clock cap per oracle query, in seconds",
    )
    bipartite_max_n: int = Field(
        default=4,
        ge=0,
        description="Largest part size for the bipartite oracle (2^(n*n) graphs)",
    )
    scan_workers: int = Field(
        default=1,
        description="joblib workers for sequence scans (1 sequential, -1 all cores)",
    )
    log_level: str = Field(
        default="WARNING",
        description="Root log level for the command line",
    )
    fixtures_path: Path = Field(
        default=Path("./fixtures"),
        description="Directory receiving oracle fixture JSONL files",
    )

    @field_validator("scan_workers")
    @classmethod
    def _workers_nonzero(cls, value: int) -> int:
        if value == 0:
            raise ValueError("scan_workers must be nonzero")
        return value


def get_settings() -> Settings:
    """Get application settings instance."""
    return Settings()
