# poly_ldc_lib/config.py

import logging
import os
from contextlib import contextmanager
from dataclasses import dataclass, replace
from typing import Iterable, Iterator, Optional

from .errors import SizeCap

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class Settings:
    cap: int = DEFAULT_CAP
    workers: int = 1
    log_level: str = "WARNING"


def _int_from_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got '{raw}'")
    if value < 1:
        raise ValueError(f"Environment variable {name} must be positive, got {value}")
    return value


def _level_from_env(name: str, default: str) -> str:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    if not isinstance(logging.getLevelName(raw.strip().upper()), int):
        raise ValueError(f"Environment variable {name} must be a log level name, got '{raw}'")
    return raw.strip().upper()


def load_settings() -> Settings:
    """
    Read settings from the environment.

    Returns:
        Settings: cap from POLY_LDC_CAP, pool size from POLY_LDC_WORKERS and
        log level from POLY_LDC_LOG_LEVEL.

    Raises:
        ValueError: when one of the variables is set to something unusable.
    """
    return Settings(
        cap=_int_from_env("POLY_LDC_CAP", DEFAULT_CAP),
        workers=_int_from_env("POLY_LDC_WORKERS", 1),
        log_level=_level_from_env("POLY_LDC_LOG_LEVEL", "WARNING"),
    )


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """The environment is read on first use, never at import."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def reload_settings() -> Settings:
    global _settings
    _settings = None
    return get_settings()


def get_cap() -> int:
    return get_settings().cap


def set_cap(cap: int) -> None:
    global _settings
    if cap < 1:
        raise ValueError(f"Size cap must be positive, got {cap}")
    _settings = replace(get_settings(), cap=cap)


@contextmanager
def size_cap(cap: Optional[int]) -> Iterator[int]:
    """Temporarily override the size cap; None keeps the current one."""
    previous = get_cap()
    if cap is not None:
        set_cap(cap)
    try:
        yield get_cap()
    finally:
        set_cap(previous)


def check_size(requested: int, what: str) -> None:
    """
    Raise SizeCap when an output of `requested` elements would exceed the cap.

    Args:
        requested (int): Cardinality about to be materialized.
        what (str): Short description used in the error message.
    """
    cap = get_cap()
    if requested > cap:
        raise SizeCap(requested, cap, what)


def bounded_power(base: int, exponent: int) -> int:
    """base ** exponent, or cap + 1 when that is larger, without building the big integer."""
    limit = get_cap() + 1
    if base <= 1 or exponent == 0:
        return base**exponent
    if exponent >= limit.bit_length():
        return limit
    return min(base**exponent, limit)


def bounded_product(factors: Iterable[int]) -> int:
    """The product of the factors, clipped to cap + 1 once it passes the cap."""
    limit = get_cap() + 1
    result = 1
    for factor in factors:
        if factor == 0:
            return 0
        result = min(result * factor, limit)
    return result
