"""
Runtime settings resolved from the environment.
"""
import logging
import os

from pydantic import BaseModel, Field, ValidationError

from bracetree.errors import ConfigurationError

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Dense elimination cost grows like D^n * Catalan(n - 1)
DEGREE_CAPS = {1: 7, 2: 5, 3: 4}


class Settings(BaseModel):
    log_level: str = Field("warning", description="Root logging level")
    seed: int = Field(42, description="Seed of the random tree generators")
    trials: int = Field(100, ge=0, description="Random trials per configuration")
    max_weight: int = Field(5, ge=1, description="Largest total weight in axiom suites")
    workers: int = Field(0, ge=0, description="Process pool size, 0 means cpu count")

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from environment variables, falling back to defaults."""
        try:
            return cls(
                log_level=os.getenv("LOG_LEVEL", "warning").lower(),
                seed=int(os.getenv("BRACETREE_SEED", "42")),
                trials=int(os.getenv("BRACETREE_TRIALS", "100")),
                max_weight=int(os.getenv("BRACETREE_MAX_WEIGHT", "5")),
                workers=int(os.getenv("BRACETREE_WORKERS", "0")),
            )
        except (ValueError, ValidationError) as e:
            raise ConfigurationError(f"Invalid bracetree environment: {e}") from e

    def logging_level(self) -> int:
        level = logging.getLevelName(self.log_level.upper())
        if not isinstance(level, int):
            raise ConfigurationError(f"Unknown log level: {self.log_level}")
        return level


def default_max_degree(alphabet_size: int) -> int:
    """Largest degree verified by default for an alphabet of the given size."""
    return DEGREE_CAPS.get(alphabet_size, 3)
