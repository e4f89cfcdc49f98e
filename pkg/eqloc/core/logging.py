"""Logging setup."""

import logging

from eqloc.core.config import Settings, settings

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def configure_logging(config: Settings = settings) -> None:
    """Configure root logging once; records go to stderr."""
    level = logging.DEBUG if config.DEBUG else getattr(logging, config.LOG_LEVEL, logging.WARNING)
    logging.basicConfig(level=level, format=LOG_FORMAT)

    # Suppress noisy library logs
    logging.getLogger("sympy").setLevel(logging.WARNING)
