"""Runtime settings: ``config/config.json`` plus environment overrides."""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

log = logging.getLogger(__name__)

CONFIG_PATH = Path(__file__).resolve().parent.parent / "config" / "config.json"
THREADS_ENV = "DOMIDEAL_THREADS"
CONFIG_ENV = "DOMIDEAL_CONFIG"
LOG_LEVEL_ENV = "DOMIDEAL_LOG_LEVEL"


class Settings(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    # None means the n-1 decision bound
    normality_bound: Optional[int] = Field(default=None, ge=1)
    property_bound: int = Field(default=4, ge=1)
    criterion_power_cap: int = Field(default=3, ge=1)
    timeout_sec: Optional[float] = Field(default=None, gt=0)
    threads: int = Field(default=1, ge=1)
    decomposition_method: Literal["staircase", "split"] = "staircase"
    ass_method: Literal["localization", "decomposition"] = "localization"
    log_level: str = "WARNING"


def load_settings(path: str | Path | None = None) -> Settings:
    path = Path(path or os.environ.get(CONFIG_ENV) or CONFIG_PATH)
    data: dict = {}
    if path.is_file():
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    else:
        log.warning("config file %s not found; using defaults", path)
    if os.environ.get(THREADS_ENV):
        data["threads"] = int(os.environ[THREADS_ENV])
    if os.environ.get(LOG_LEVEL_ENV):
        data["log_level"] = os.environ[LOG_LEVEL_ENV]
    return Settings(**data)


_active: Optional[Settings] = None


def get_settings() -> Settings:
    global _active
    if _active is None:
        _active = load_settings()
    return _active


def use_settings(settings: Settings | None = None, **overrides) -> Settings:
    """Install settings for this process; keyword overrides with value None are ignored."""
    global _active
    base = settings or get_settings()
    updates = {k: v for k, v in overrides.items() if v is not None}
    _active = Settings(**{**base.model_dump(), **updates}) if updates else base
    return _active
