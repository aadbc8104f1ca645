"""
Runtime settings

Everything is read from environment variables with a default, so a run is
fully described by its flags plus its environment. Explicit arguments to
library functions always win over these values.
"""

import os
from functools import lru_cache

from pydantic import BaseModel, Field


def _env_flag(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).lower() in ("1", "true", "yes", "on")


class Settings(BaseModel):
    """
    Ambient knobs for the library and CLI.

    Attributes:
        log_level: Root logging level for the CLI
        atom_cap: Largest vertex count enumerate_atoms accepts
        strict_r2: Only accept the p q ... q p pattern for unsigned R2
        max_crossings: Default crossing cap for additions in walks
    """

    log_level: str = "WARNING"
    atom_cap: int = Field(default=12, ge=0)
    strict_r2: bool = False
    max_crossings: int = Field(default=8, ge=0)

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            log_level=os.getenv("LOG_LEVEL", "WARNING").upper(),
            atom_cap=int(os.getenv("KNOT_PARITY_ATOM_CAP", "12")),
            strict_r2=_env_flag("KNOT_PARITY_STRICT_R2"),
            max_crossings=int(os.getenv("KNOT_PARITY_MAX_CROSSINGS", "8")),
        )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Settings read once from the environment"""
    return Settings.from_env()
