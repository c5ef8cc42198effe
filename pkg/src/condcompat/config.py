"""Runtime configuration loader for condcompat.

Loads config.json once, resolves env-var references, and exposes typed
dataclasses via get_config().

Env-var references
------------------
Values in config.json that look like ``UPPER_SNAKE_CASE`` strings
(e.g. ``"CONDCOMPAT_LOG_LEVEL"``) are treated as env-var references and
resolved from ``os.environ`` (after ``.env`` has been loaded). A reference
that is not set falls back to the built-in default.

The config file is looked up at ``$CONDCOMPAT_CONFIG`` first, then at
``configs/config.json`` in the project root. When neither exists the
defaults from constants.py are used.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from loguru import logger

from condcompat.constants import (
    CONFIG_ENV_VAR,
    CONFIG_FILENAME,
    DEFAULT_DECIMAL_PLACES,
    DEFAULT_FORMAT,
    DEFAULT_GRID_STEPS,
    DEFAULT_LOG_LEVEL,
    DEFAULT_MAX_CELL_WEIGHT,
    DEFAULT_METHOD,
    FORMATS,
    METHODS,
)

# Pattern to detect env-var-style values: UPPER_SNAKE_CASE with optional digits
_ENV_VAR_PATTERN = re.compile(r"^[A-Z][A-Z0-9_]{2,}$")
_LOG_LEVELS = {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}


# ──────────────────────────────────────────────────────────────────────
# Env-var Resolution
# ──────────────────────────────────────────────────────────────────────


def resolve_env(value: Any, default: Any = None) -> Any:
    """Resolve a potential env-var reference.

    Non-string values and lowercase literals are returned unchanged.
    Log levels are themselves upper case, so a known level name is never
    treated as a reference.

    Returns:
        The resolved value, or ``default`` if the reference is unset.
    """
    if value is None or value == "":
        return default
    if not isinstance(value, str):
        return value

    if value in _LOG_LEVELS:
        return value

    if _ENV_VAR_PATTERN.match(value):
        resolved = os.environ.get(value)
        if resolved is None:
            logger.debug(f"Env reference '{value}' not set, using default {default!r}")
            return default
        return resolved

    return value


# ──────────────────────────────────────────────────────────────────────
# Config Dataclasses
# ──────────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class LoggingConfig:
    """stderr sink settings."""

    level: str = DEFAULT_LOG_LEVEL


@dataclass(frozen=True)
class CheckConfig:
    """Defaults for the ``check`` command and report rendering."""

    method: str = DEFAULT_METHOD
    format: str = DEFAULT_FORMAT


@dataclass(frozen=True)
class DisplayConfig:
    decimal_places: int = DEFAULT_DECIMAL_PLACES


@dataclass(frozen=True)
class OracleConfig:
    """Brute-force oracle knobs."""

    grid_steps: int = DEFAULT_GRID_STEPS
    max_cell_weight: int = DEFAULT_MAX_CELL_WEIGHT


@dataclass(frozen=True)
class AppConfig:
    """Root config object holding all resolved configuration."""

    logging: LoggingConfig = field(default_factory=LoggingConfig)
    check: CheckConfig = field(default_factory=CheckConfig)
    display: DisplayConfig = field(default_factory=DisplayConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)
    source: Path | None = None


# ──────────────────────────────────────────────────────────────────────
# Config Loading
# ──────────────────────────────────────────────────────────────────────

_config: AppConfig | None = None


def _find_config_file() -> Path | None:
    """Return the config path from the env override or the project root."""
    override = os.environ.get(CONFIG_ENV_VAR)
    if override:
        path = Path(override).expanduser()
        if not path.exists():
            raise FileNotFoundError(f"Config file not found: {path}")
        return path

    current = Path(__file__).resolve().parent
    for _ in range(10):  # safety limit
        candidate = current / CONFIG_FILENAME
        if candidate.exists():
            return candidate
        parent = current.parent
        if parent == current:
            break
        current = parent
    return None


def _load_raw_config() -> tuple[dict[str, Any], Path | None]:
    """Load and return the raw config.json dict and where it came from."""
    path = _find_config_file()
    if path is None:
        logger.debug("No config file found, using built-in defaults")
        return {}, None

    with open(path, encoding="utf-8") as f:
        data = json.load(f)

    logger.debug(f"Loaded config from {path}")
    return data, path


def _choice(value: Any, allowed: tuple[str, ...], default: str, key: str) -> str:
    if value in allowed:
        return value
    if value is not None:
        logger.warning(
            f"Config '{key}'={value!r} not one of {allowed}, using {default!r}"
        )
    return default


def _parse_config(raw: dict[str, Any], source: Path | None = None) -> AppConfig:
    """Parse raw config dict into typed AppConfig."""

    # --- Logging ---
    logging_raw = raw.get("logging", {})
    level = str(resolve_env(logging_raw.get("level"), DEFAULT_LOG_LEVEL)).upper()
    if level not in _LOG_LEVELS:
        logger.warning(f"Unknown log level {level!r}, using {DEFAULT_LOG_LEVEL}")
        level = DEFAULT_LOG_LEVEL

    # --- Check ---
    check_raw = raw.get("check", {})
    check = CheckConfig(
        method=_choice(
            resolve_env(check_raw.get("method"), DEFAULT_METHOD),
            METHODS, DEFAULT_METHOD, "check.method",
        ),
        format=_choice(
            resolve_env(check_raw.get("format"), DEFAULT_FORMAT),
            FORMATS, DEFAULT_FORMAT, "check.format",
        ),
    )

    # --- Display / Oracle ---
    display_raw = raw.get("display", {})
    oracle_raw = raw.get("oracle", {})

    return AppConfig(
        logging=LoggingConfig(level=level),
        check=check,
        display=DisplayConfig(
            decimal_places=int(
                resolve_env(display_raw.get("decimal_places"), DEFAULT_DECIMAL_PLACES)
            ),
        ),
        oracle=OracleConfig(
            grid_steps=int(
                resolve_env(oracle_raw.get("grid_steps"), DEFAULT_GRID_STEPS)
            ),
            max_cell_weight=int(
                resolve_env(oracle_raw.get("max_cell_weight"), DEFAULT_MAX_CELL_WEIGHT)
            ),
        ),
        source=source,
    )


def get_config(*, reload: bool = False) -> AppConfig:
    """Return the singleton AppConfig, loading it on first call.

    Args:
        reload: Force re-read from disk (useful for testing).
    """
    global _config

    if _config is None or reload:
        from dotenv import load_dotenv

        load_dotenv()  # populate os.environ from .env

        raw, source = _load_raw_config()
        _config = _parse_config(raw, source)

    return _config
