"""Environment-driven settings."""
import os
from dataclasses import dataclass
from functools import lru_cache

from dotenv import load_dotenv

from core.errors import ConfigurationError

# Load environment variables
load_dotenv()

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off", ""}


@dataclass(frozen=True)
class Settings:
    """Runtime settings read once from the environment."""

    log_level: str = "WARNING"
    cloud_logging: bool = False
    seed: int = 20150611
    memoize: bool = True
    oracle_max_cells: int = 20
    oracle_max_bound: int = 3
    oracle_max_value: int = 16


def _read_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}") from exc
    if value < 0:
        raise ConfigurationError(f"{name} must be non-negative, got {value}")
    return value


def _read_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    lowered = raw.strip().lower()
    if lowered in _TRUE:
        return True
    if lowered in _FALSE:
        return False
    raise ConfigurationError(f"{name} must be a boolean flag, got {raw!r}")


def load_settings() -> Settings:
    """Build settings from the current environment.

    Returns:
        A fresh Settings instance

    Raises:
        ConfigurationError: when a variable is present but malformed
    """
    defaults = Settings()
    return Settings(
        log_level=os.getenv("HILBERT_LOG_LEVEL", defaults.log_level).upper(),
        cloud_logging=_read_bool("HILBERT_CLOUD_LOGGING", defaults.cloud_logging),
        seed=_read_int("HILBERT_SEED", defaults.seed),
        memoize=_read_bool("HILBERT_MEMOIZE", defaults.memoize),
        oracle_max_cells=_read_int("HILBERT_ORACLE_MAX_CELLS", defaults.oracle_max_cells),
        oracle_max_bound=_read_int("HILBERT_ORACLE_MAX_BOUND", defaults.oracle_max_bound),
        oracle_max_value=_read_int("HILBERT_ORACLE_MAX_VALUE", defaults.oracle_max_value),
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Process-wide settings, loaded on first use."""
    return load_settings()
