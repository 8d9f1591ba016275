"""Built-in configurations."""

from ...models.config import Config


def get_default_config() -> Config:
    """The configuration written by ``sympidx config init``."""
    return Config()


def get_fast_config() -> Config:
    """Coarse grid, few trials and one dimension, for smoke runs and tests."""
    return Config(
        numerics={"grid": 1024},
        suite={"trials": 5, "dims": [1]},
        output={"color_enabled": False},
    )
