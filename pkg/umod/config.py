"""Settings and logging for the umod package"""

import logging
import os
from functools import lru_cache
from pathlib import Path
from typing import List, Optional

import yaml
from pydantic import BaseModel, Field

# ✅ CONFIGURATION
# Environment variables win over umod_config.yaml, which wins over the defaults below
DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "umod_config.yaml"
DEFAULT_ORACLE_BOUND = 14

LOG_FORMAT = "[%(levelname)s] %(name)s: %(message)s"


class BenchSettings(BaseModel):
    mu_sizes: List[int] = [250, 500, 1000, 2000]
    generic_sizes: List[int] = [40, 80, 160]
    fast_sizes: List[int] = [200, 400, 800]


class Settings(BaseModel):
    oracle_bound: int = Field(default=DEFAULT_ORACLE_BOUND, ge=1, le=24)
    pivot: int = Field(default=0, ge=0)
    log_level: str = "WARNING"
    bench: BenchSettings = BenchSettings()


def _read_yaml(path: Path) -> dict:
    if not path.is_file():
        return {}
    with path.open("r", encoding="utf-8") as f:
        data = yaml.safe_load(f)
    return data or {}


@lru_cache(maxsize=1)
def get_settings(config_path: Optional[str] = None) -> Settings:
    """
    Merge built-in defaults, the yaml file and environment overrides.
    """
    path = Path(config_path or os.getenv("UMOD_CONFIG", str(DEFAULT_CONFIG_PATH)))
    values = _read_yaml(path)

    bound = os.getenv("UMOD_ORACLE_BOUND")
    if bound:
        values["oracle_bound"] = int(bound)
    level = os.getenv("UMOD_LOG_LEVEL")
    if level:
        values["log_level"] = level

    return Settings(**values)


def oracle_bound() -> int:
    return get_settings().oracle_bound


def get_logger(name: str) -> logging.Logger:
    """Package logger; the root 'umod' logger gets one stream handler."""
    root = logging.getLogger("umod")
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
        root.setLevel(get_settings().log_level.upper())
    return logging.getLogger(name)


def set_log_level(level: str) -> None:
    get_logger("umod").setLevel(level.upper())
