# This file makes the config directory a package.
from .config import DEFAULT_SEED, AppConfig, read_env
from .logging_config import configure_logging

__all__ = ["AppConfig", "DEFAULT_SEED", "configure_logging", "read_env"]
