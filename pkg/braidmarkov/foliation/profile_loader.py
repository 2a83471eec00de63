from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from ..config import Settings, _deep_update


def build_grow_profile(
    settings: Settings,
    profile: Optional[str] = None,
    overrides: Optional[Dict[str, Any]] = None,
) -> Dict[str, Any]:
    """Grow/simplify/bench options: settings first, then a configs/bench/<profile>.yaml, then overrides."""
    merged: Dict[str, Any] = {
        "grow": settings.grow.model_dump(),
        "simplify": settings.simplify.model_dump(),
        "bench": settings.bench.model_dump(),
    }
    name = profile or settings.bench.profile
    if name:
        cfg_path = Path(name)
        if cfg_path.suffix not in (".yaml", ".yml"):
            cfg_path = Path("configs") / "bench" / f"{name}.yaml"
        if not cfg_path.is_absolute():
            cfg_path = (Path.cwd() / cfg_path).resolve()
        if cfg_path.exists():
            loaded = yaml.safe_load(cfg_path.read_text(encoding="utf-8"))
            if isinstance(loaded, dict):
                _deep_update(merged, loaded)
    if overrides:
        _deep_update(merged, overrides)
    return merged
