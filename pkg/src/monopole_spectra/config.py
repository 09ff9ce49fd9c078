"""Run configuration: a JSON document with one block per parameter group.

Every block is optional; omitted blocks and keys fall back to the defaults
below (hbar = M = q = 1, the A = 0.5, D = 1 Kratzer well, alpha = 1, no
screening).
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import ConfigError, InvalidParameterError
from .model import (
    KratzerParams,
    ModelParams,
    MonopoleGeometry,
    PhysicalConstants,
    ScreeningParams,
)

CONFIG_ENV_VAR = "MONOPOLE_SPECTRA_CONFIG"
FORMATS = ("csv", "json")


@dataclass(frozen=True)
class GridConfig:
    r_min: Optional[float] = None
    r_max: Optional[float] = None
    points: int = 40000


@dataclass(frozen=True)
class SeriesConfig:
    tolerance: float = 1e-10
    max_terms: int = 10**7


@dataclass(frozen=True)
class OutputConfig:
    path: Optional[str] = None
    format: str = "csv"


@dataclass(frozen=True)
class RunConfig:
    constants: PhysicalConstants = field(default_factory=PhysicalConstants)
    geometry: MonopoleGeometry = field(default_factory=lambda: MonopoleGeometry(1.0))
    kratzer: KratzerParams = field(default_factory=lambda: KratzerParams(0.5, 1.0))
    screening: ScreeningParams = field(default_factory=ScreeningParams)
    grid: GridConfig = field(default_factory=GridConfig)
    series: SeriesConfig = field(default_factory=SeriesConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    def params(self) -> ModelParams:
        return ModelParams(self.constants, self.geometry, self.kratzer, self.screening,
                           self.series.tolerance)


_KEYS = {
    "constants": ("hbar", "mass", "charge"),
    "geometry": ("alpha",),
    "kratzer": ("A", "D"),
    "screening": ("delta",),
    "grid": ("r_min", "r_max", "points"),
    "series": ("tolerance", "max_terms"),
    "output": ("path", "format"),
}


def _number(block, key, value, integer=False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{block}.{key} must be a number, got {value!r}")
    if integer and not float(value).is_integer():
        raise ConfigError(f"{block}.{key} must be an integer, got {value!r}")
    return int(value) if integer else float(value)


def parse_config(document) -> RunConfig:
    """Validate a decoded JSON object and build the :class:`RunConfig`."""
    if not isinstance(document, dict):
        raise ConfigError("configuration must be a JSON object")
    unknown = set(document) - set(_KEYS)
    if unknown:
        raise ConfigError(f"unknown configuration block(s): {', '.join(sorted(unknown))}")
    blocks = {}
    for name, keys in _KEYS.items():
        block = document.get(name, {})
        if not isinstance(block, dict):
            raise ConfigError(f"block '{name}' must be a JSON object")
        extra = set(block) - set(keys)
        if extra:
            raise ConfigError(f"unknown key(s) in '{name}': {', '.join(sorted(extra))}")
        blocks[name] = block

    base = RunConfig()
    try:
        c = blocks["constants"]
        constants = PhysicalConstants(
            *(_number("constants", k, c[k]) if k in c else getattr(base.constants, k)
              for k in ("hbar", "mass", "charge"))
        )
        g = blocks["geometry"]
        geometry = MonopoleGeometry(_number("geometry", "alpha", g["alpha"])) if "alpha" in g else base.geometry
        k = blocks["kratzer"]
        kratzer = KratzerParams(
            _number("kratzer", "A", k["A"]) if "A" in k else base.kratzer.A,
            _number("kratzer", "D", k["D"]) if "D" in k else base.kratzer.D,
        )
        s = blocks["screening"]
        screening = ScreeningParams(_number("screening", "delta", s["delta"])) if "delta" in s else base.screening
    except InvalidParameterError as exc:
        raise ConfigError(str(exc)) from exc

    gr = blocks["grid"]
    r_min = _number("grid", "r_min", gr["r_min"]) if gr.get("r_min") is not None else None
    r_max = _number("grid", "r_max", gr["r_max"]) if gr.get("r_max") is not None else None
    points = _number("grid", "points", gr["points"], integer=True) if "points" in gr else base.grid.points
    if r_min is not None and r_min <= 0:
        raise ConfigError("grid.r_min must be positive")
    if r_min is not None and r_max is not None and not r_min < r_max:
        raise ConfigError("grid.r_min must be smaller than grid.r_max")
    if points < 100:
        raise ConfigError("grid.points must be at least 100")

    se = blocks["series"]
    tolerance = _number("series", "tolerance", se["tolerance"]) if "tolerance" in se else base.series.tolerance
    max_terms = _number("series", "max_terms", se["max_terms"], integer=True) if "max_terms" in se else base.series.max_terms
    if not tolerance > 0:
        raise ConfigError("series.tolerance must be positive")
    if max_terms < 10:
        raise ConfigError("series.max_terms must be at least 10")

    out = blocks["output"]
    path = out.get("path")
    if path is not None and not isinstance(path, str):
        raise ConfigError("output.path must be a string")
    fmt = out.get("format", base.output.format)
    if fmt not in FORMATS:
        raise ConfigError(f"output.format must be one of {FORMATS}, got {fmt!r}")

    return RunConfig(constants, geometry, kratzer, screening,
                     GridConfig(r_min, r_max, points), SeriesConfig(tolerance, max_terms),
                     OutputConfig(path, fmt))


def load_config(path=None) -> RunConfig:
    """Read and validate a config file.

    With no path, the file named by ``$MONOPOLE_SPECTRA_CONFIG`` is used, and
    with neither the defaults are returned.
    """
    if path is None:
        path = os.environ.get(CONFIG_ENV_VAR) or None
    if path is None:
        return RunConfig()
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror or exc}") from exc
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        line = text.splitlines()[exc.lineno - 1] if exc.lineno - 1 < len(text.splitlines()) else ""
        raise ConfigError(
            f"{path}: parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}\n    {line}"
        ) from exc
    return parse_config(document)
