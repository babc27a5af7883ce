"""JSON model/grid configuration.

Schema (one JSON object):

    {
      "name": "four-level-parity",
      "energies": [0, 0.1, 0.2, 1.0],        # diagonal Hamiltonian shortcut
      // or "matrix": [[entry, ...], ...]    # entry = number or [re, im]
      "sectors": [[0, 2], [1, 3]],
      "grid": {                               # optional; CLI flags override
        "t0": {"min": 0.01, "max": 2.0, "n": 100},
        "t":  {"min": 0.01, "max": 2.0, "n": 100},
        "spacing": "linear"                   # or "log"
      }
    }

Exactly one of ``energies`` / ``matrix`` must be present.
"""

import json
from dataclasses import dataclass

import numpy as np

from .errors import ParseError, SthermError, ValidationError
from .thermal import ThermalModel

DEFAULT_GRID_MIN = 0.01
DEFAULT_GRID_MAX = 2.0
DEFAULT_GRID_N = 50


@dataclass
class ModelConfig:
    name: str
    hamiltonian: np.ndarray
    sectors: list

    def to_model(self) -> ThermalModel:
        return ThermalModel(self.hamiltonian, self.sectors)


@dataclass
class SweepGrid:
    t0_values: np.ndarray
    t_values: np.ndarray
    spacing: str = "linear"

    def __post_init__(self):
        for name, vals in (("t0", self.t0_values), ("t", self.t_values)):
            v = np.asarray(vals, dtype=float)
            if v.size == 0:
                raise ValidationError(f"grid axis {name} is empty")
            if np.any(v <= 0) or not np.all(np.isfinite(v)):
                raise ValidationError(f"grid axis {name} must be positive and finite")
            if np.any(np.diff(v) <= 0) and v.size > 1:
                raise ValidationError(f"grid axis {name} must be strictly ascending")
            setattr(self, f"{name}_values", v)
        if self.spacing not in ("linear", "log"):
            raise ValidationError(f"unknown spacing {self.spacing!r}")


def _axis(lo: float, hi: float, n: int, spacing: str) -> np.ndarray:
    if lo <= 0 or hi < lo or n < 1:
        raise ValidationError(f"bad grid axis ({lo}, {hi}, {n})")
    if n == 1:
        return np.array([lo])
    if spacing == "log":
        return np.geomspace(lo, hi, n)
    return np.linspace(lo, hi, n)


def make_grid(t0_spec, t_spec, spacing: str = "linear") -> SweepGrid:
    """Build a grid from two (min, max, n) triples."""
    return SweepGrid(
        _axis(*t0_spec, spacing), _axis(*t_spec, spacing), spacing
    )


def parse_grid_flag(text: str, spacing: str = "linear") -> SweepGrid:
    """Parse the CLI grid syntax ``t0_min:t0_max:n,t_min:t_max:n``."""
    try:
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError("expected two comma-separated axes")
        specs = []
        for part in parts:
            lo, hi, n = part.split(":")
            specs.append((float(lo), float(hi), int(n)))
    except ValueError as exc:
        raise ParseError(f"bad --grid value {text!r}: {exc}") from None
    return make_grid(specs[0], specs[1], spacing)


def _parse_matrix(raw) -> np.ndarray:
    def entry(x):
        if isinstance(x, (int, float)):
            return complex(x)
        if isinstance(x, list) and len(x) == 2:
            return complex(x[0], x[1])
        raise ValidationError(f"matrix entries must be numbers or [re, im], got {x!r}")

    return np.array([[entry(x) for x in row] for row in raw], dtype=complex)


def load_config(path) -> tuple[ModelConfig, SweepGrid]:
    """Load and validate a model config file; returns (config, grid)."""
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}") from None
    if not isinstance(raw, dict):
        raise ValidationError(f"{path}: top level must be a JSON object")
    if ("energies" in raw) == ("matrix" in raw):
        raise ValidationError("config must contain exactly one of 'energies' / 'matrix'")
    if "sectors" not in raw:
        raise ValidationError("config is missing 'sectors'")
    if "energies" in raw:
        h = np.diag(np.asarray(raw["energies"], dtype=float)).astype(complex)
    else:
        h = _parse_matrix(raw["matrix"])
    cfg = ModelConfig(str(raw.get("name", "unnamed")), h, raw["sectors"])
    try:
        cfg.to_model()  # full ThermalModel validation
    except ValidationError:
        raise
    except SthermError as exc:
        raise ValidationError(f"{path}: {exc}") from None
    grid_raw = raw.get("grid", {})
    spacing = grid_raw.get("spacing", "linear")
    axes = []
    for key in ("t0", "t"):
        ax = grid_raw.get(key, {})
        axes.append(
            (
                float(ax.get("min", DEFAULT_GRID_MIN)),
                float(ax.get("max", DEFAULT_GRID_MAX)),
                int(ax.get("n", DEFAULT_GRID_N)),
            )
        )
    return cfg, make_grid(axes[0], axes[1], spacing)
