from __future__ import annotations

import os
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class AppConfig(BaseModel):
    env: str = "dev"
    log_level: str = "INFO"


class GrowConfig(BaseModel):
    max_moves: int = 30
    max_run: int = 3
    # relative frequencies of the inverse moves used by grow_disc
    weights: Dict[str, float] = Field(
        default_factory=lambda: {"end_tile": 1.0, "ab_tile": 1.0, "pillow": 0.5}
    )


class SimplifyConfig(BaseModel):
    remove_inessential: bool = True
    validate_each_step: bool = True


class BenchConfig(BaseModel):
    cases: int = 200
    seed: int = 0
    max_moves: int = 30
    # scripts are drawn with length in [min_moves, max_moves]
    min_moves: int = 0
    workers: int = 1
    profile: Optional[str] = None  # configs/bench/<profile>.yaml


class InvariantsConfig(BaseModel):
    max_strands: int = 16
    oracles: List[str] = Field(
        default_factory=lambda: ["components", "exponent_sum", "self_linking", "alexander", "determinant"]
    )


class ApiConfig(BaseModel):
    host: str = "0.0.0.0"
    port: int = 8000
    cors_allow_origins: List[str] = Field(default_factory=lambda: ["*"])
    base_path: str = ""


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_nested_delimiter="__",
        extra="ignore",
    )

    app: AppConfig = Field(default_factory=AppConfig)
    grow: GrowConfig = Field(default_factory=GrowConfig)
    simplify: SimplifyConfig = Field(default_factory=SimplifyConfig)
    bench: BenchConfig = Field(default_factory=BenchConfig)
    invariants: InvariantsConfig = Field(default_factory=InvariantsConfig)
    api: ApiConfig = Field(default_factory=ApiConfig)

    @field_validator("grow")
    @classmethod
    def _validate_grow(cls, v: GrowConfig) -> GrowConfig:
        if v.max_moves < 0:
            raise ValueError("grow.max_moves must be >= 0")
        if v.max_run < 0:
            raise ValueError("grow.max_run must be >= 0")
        unknown = set(v.weights) - {"end_tile", "ab_tile", "pillow"}
        if unknown:
            raise ValueError(f"grow.weights has unknown moves: {sorted(unknown)}")
        if any(w < 0 for w in v.weights.values()):
            raise ValueError("grow.weights must be >= 0")
        if not any(w > 0 for w in v.weights.values()):
            raise ValueError("grow.weights must not be all zero")
        return v

    @field_validator("bench")
    @classmethod
    def _validate_bench(cls, v: BenchConfig) -> BenchConfig:
        if v.cases <= 0:
            raise ValueError("bench.cases must be > 0")
        if v.max_moves < 0:
            raise ValueError("bench.max_moves must be >= 0")
        if not 0 <= v.min_moves <= v.max_moves:
            raise ValueError("bench.min_moves must be in [0, max_moves]")
        if v.workers < 1:
            raise ValueError("bench.workers must be >= 1")
        return v

    @field_validator("invariants")
    @classmethod
    def _validate_invariants(cls, v: InvariantsConfig) -> InvariantsConfig:
        if v.max_strands < 2:
            raise ValueError("invariants.max_strands must be >= 2")
        return v


def _deep_update(dst: Dict[str, Any], src: Dict[str, Any]) -> Dict[str, Any]:
    for k, v in src.items():
        if isinstance(v, dict) and isinstance(dst.get(k), dict):
            _deep_update(dst[k], v)
        else:
            dst[k] = v
    return dst


def _env_overrides() -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    valid_roots = set(Settings.model_fields.keys())
    for key, value in os.environ.items():
        if "__" not in key:
            continue
        parts = [p.strip().lower() for p in key.split("__") if p.strip()]
        if not parts or parts[0] not in valid_roots:
            continue
        cur = out
        for part in parts[:-1]:
            nxt = cur.get(part)
            if not isinstance(nxt, dict):
                nxt = {}
                cur[part] = nxt
            cur = nxt
        cur[parts[-1]] = value
    return out


def load_settings(config_path: Optional[str] = None) -> Settings:
    path = Path(config_path or "./configs/config.yaml")
    data: Dict[str, Any] = {}
    if path.exists():
        loaded = yaml.safe_load(path.read_text(encoding="utf-8"))
        if isinstance(loaded, dict):
            data = loaded

    merged = _deep_update(data, _env_overrides())
    return Settings(**merged)
