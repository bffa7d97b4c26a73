import os
from functools import lru_cache

from pydantic import BaseModel, Field


class Settings(BaseModel):
    """
    Runtime settings of the toolkit.

    Explanation:
    Numeric checks share one tolerance, one sample count and one seed so that reports are reproducible.
    The database URL selects where verification runs are stored.

    Args:
        - tolerance (float): Residual bound of numeric checks. Must be greater than 0.
        - samples (int): Number of random Bring points per numeric suite. Must be greater than 0.
        - seed (int): Seed of the random generator.
        - database_url (str): SQLAlchemy URL of the run store.
    """

    tolerance: float = Field(default=1e-8, gt=0)
    samples: int = Field(default=100, gt=0)
    seed: int = 1
    database_url: str = "sqlite:///belyi_verifications.db"


_ENVIRONMENT = {
    "tolerance": "BELYI_TOLERANCE",
    "samples": "BELYI_SAMPLES",
    "seed": "BELYI_SEED",
    "database_url": "BELYI_DATABASE_URL",
}


@lru_cache
def get_settings() -> Settings:
    """Build settings from ``BELYI_*`` environment variables, falling back to defaults."""
    values = {field: os.environ[name] for field, name in _ENVIRONMENT.items() if name in os.environ}
    return Settings(**values)
