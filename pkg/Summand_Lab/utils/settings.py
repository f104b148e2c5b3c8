"""
Settings loader for Summand Lab
Reads config/lab_config.yaml, then applies SUMMANDLAB_* environment overrides
"""
import logging
import os
from functools import lru_cache
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field

from .errors import ConfigurationError

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = os.path.abspath(
    os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "config", "lab_config.yaml")
)

ENV_GB_BUDGET = "SUMMANDLAB_GB_BUDGET"
ENV_DEGREE_BOUND = "SUMMANDLAB_DEGREE_BOUND"
ENV_CONFIG_PATH = "SUMMANDLAB_CONFIG"
ENV_LOG_LEVEL = "SUMMANDLAB_LOG_LEVEL"


class LabSettings(BaseModel):
    s_pair_budget: int = Field(default=50000, gt=0)
    max_terms: int = Field(default=50000, gt=0)
    splitting_degree_bound: int = Field(default=8, gt=0)
    graded_degree_bound: int = Field(default=12, gt=0)
    torus_degree_bound: int = Field(default=10, gt=0)
    cli_indent: int = Field(default=2, ge=0)
    include_timing: bool = False
    log_level: str = "INFO"
    log_format: str = "%(asctime)s - %(levelname)s - %(message)s"
    log_to_console: bool = True


def _read_yaml(path: str) -> Dict[str, Any]:
    """Read the YAML file, falling back to an empty mapping."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            return yaml.safe_load(f) or {}
    except FileNotFoundError:
        logger.warning(f"Config YAML not found at: {path}; using defaults")
    except Exception as e:
        logger.error(f"Failed to load config YAML {path}: {e}", exc_info=True)
    return {}


def _env_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}")
    if value <= 0:
        raise ConfigurationError(f"{name} must be positive, got {value}")
    return value


def load_settings(path: Optional[str] = None) -> LabSettings:
    """Build settings from YAML plus environment overrides."""
    path = path or os.getenv(ENV_CONFIG_PATH) or DEFAULT_CONFIG_PATH
    data = _read_yaml(path)

    groebner = data.get("groebner") or {}
    splitting = data.get("splitting") or {}
    graded = data.get("graded") or {}
    torus = data.get("torus") or {}
    cli = data.get("cli") or {}
    log_cfg = data.get("logging") or {}

    values: Dict[str, Any] = {
        "s_pair_budget": groebner.get("s_pair_budget"),
        "max_terms": groebner.get("max_terms"),
        "splitting_degree_bound": splitting.get("degree_bound"),
        "graded_degree_bound": graded.get("degree_bound"),
        "torus_degree_bound": torus.get("degree_bound"),
        "cli_indent": cli.get("indent"),
        "include_timing": cli.get("include_timing"),
        "log_level": log_cfg.get("level"),
        "log_format": log_cfg.get("format"),
        "log_to_console": log_cfg.get("log_to_console"),
    }

    budget = _env_int(ENV_GB_BUDGET)
    if budget is not None:
        values["s_pair_budget"] = budget
    bound = _env_int(ENV_DEGREE_BOUND)
    if bound is not None:
        values["splitting_degree_bound"] = bound
    if os.getenv(ENV_LOG_LEVEL):
        values["log_level"] = os.getenv(ENV_LOG_LEVEL)

    try:
        return LabSettings(**{k: v for k, v in values.items() if v is not None})
    except ValueError as e:
        raise ConfigurationError(f"Invalid configuration in {path}: {e}")


@lru_cache(maxsize=1)
def get_settings() -> LabSettings:
    """Process-wide settings, loaded once."""
    return load_settings()


def reset_settings() -> None:
    """Forget cached settings so the next call re-reads YAML and environment."""
    get_settings.cache_clear()
