from __future__ import annotations

from pathlib import Path
import os

import yaml

PROJECT_ROOT = Path(__file__).resolve().parents[1]

def _env_path(name: str, default: Path) -> Path:
    v = os.environ.get(name)
    return Path(v) if v else default

REPORT_DIR = _env_path("MACVV_REPORT_DIR", PROJECT_ROOT / "reports")
LIMITS_PATH = _env_path("MACVV_LIMITS_PATH", PROJECT_ROOT / "config" / "limits.yml")

def load_limits(path: Path = LIMITS_PATH) -> dict:
    data = yaml.safe_load(Path(path).read_text(encoding="utf-8")) or {}
    return {"limits": dict(data.get("limits") or {}), "defaults": dict(data.get("defaults") or {})}

_LOADED = load_limits()
LIMITS = _LOADED["limits"]
DEFAULTS = _LOADED["defaults"]


class InfeasibleRequest(ValueError):
    """Forespørselen går over en grense i config/limits.yml."""


def check_limit(key: str, value: int, unsafe: bool = False) -> None:
    """Avviser value > LIMITS[key] med mindre unsafe er satt."""
    bound = LIMITS.get(key)
    if unsafe or bound is None:
        return
    if value > int(bound):
        raise InfeasibleRequest(
            f"infeasible request: {key}={value} exceeds limit {bound} "
            f"(see {LIMITS_PATH.name}, or pass --unsafe-large)"
        )
