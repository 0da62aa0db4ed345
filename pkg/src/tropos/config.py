"""Runtime settings.

Settings are read once from ``TROPOS_*`` environment variables; CLI flags
override them per invocation.
"""

import logging
import os
from functools import lru_cache

from pydantic import BaseModel, Field, ValidationError

logger = logging.getLogger("tropos.config")

# Environment variable -> settings field
ENV_VARS = {
    "TROPOS_ENUMERATION_CAP": "enumeration_cap",
    "TROPOS_MINOR_CAP": "minor_cap",
    "TROPOS_SEED": "seed",
}


class Settings(BaseModel):
    """Caps and seeds shared by every module."""

    enumeration_cap: int = Field(
        default=9, ge=1, description="Largest n for brute-force permanents (n! permutations)"
    )
    minor_cap: int = Field(
        default=7, ge=1, description="Largest min(n, m) for exhaustive series minor enumeration"
    )
    seed: int = Field(default=0, description="Seed for randomized lifts and samples")

    @classmethod
    def from_env(cls, environ: dict[str, str] | None = None) -> "Settings":
        """Build settings from environment variables.

        Args:
            environ: Mapping to read instead of ``os.environ``.

        Returns:
            Settings with defaults for unset variables.

        Raises:
            ValueError: If a variable holds an invalid value.
        """
        source = os.environ if environ is None else environ
        values = {field: source[var] for var, field in ENV_VARS.items() if var in source}
        try:
            return cls.model_validate(values)
        except ValidationError as e:
            raise ValueError(f"Invalid tropos environment settings: {e}") from e


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings."""
    settings = Settings.from_env()
    logger.debug(f"Loaded settings: {settings.model_dump()}")
    return settings


def enumeration_cap(cap: int | None = None) -> int:
    """Resolve an explicit permanent-enumeration cap against the settings."""
    return get_settings().enumeration_cap if cap is None else cap


def minor_cap(cap: int | None = None) -> int:
    """Resolve an explicit minor-enumeration cap against the settings."""
    return get_settings().minor_cap if cap is None else cap
