# poly_ldc_lib/logger.py

import logging
import sys

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logger(name: str = "poly_ldc", level: str = "WARNING") -> logging.Logger:
    """
    Logger shared by the library modules and the CLI.

    Reports are printed on stdout, so records go to stderr. Calling it again
    only changes the level.

    Raises:
        ValueError: for a level name logging does not know.
    """
    value = logging.getLevelName(level.upper())
    if not isinstance(value, int):
        raise ValueError(f"Unknown log level '{level}'")

    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    logger.setLevel(value)
    return logger


logger = setup_logger()
