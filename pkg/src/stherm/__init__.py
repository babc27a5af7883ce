"""Symmetry-constrained thermalization, erasure bookkeeping and battery states."""

from .config import ModelConfig, SweepGrid, load_config, make_grid
from .demon import RegisterSpec
from .ergotropy import (
    asymptotic_ergotropy,
    effective_inverse_temperature,
    excess_ergotropy,
    passive_state,
)
from .linalg import EigenSystem, eigh, func_of_hermitian, validate_hermitian
from .thermal import (
    ThermalModel,
    free_energy,
    gibbs_state,
    internal_energy,
    relative_entropy,
    s_thermalize,
    sector_gibbs,
    sector_probabilities,
    shannon_entropy,
    von_neumann_entropy,
)
from .thermo import ThermoReport, amplification_ratio, build_report, classify
from .sweep import ResultRow, compute_row, emit, run_sweep

# keep the submodules reachable as attributes (the single-copy ergotropy
# function lives at stherm.ergotropy.ergotropy)
from . import checks, config, demon, ergotropy, linalg, sweep, thermal, thermo  # noqa: E402,F401

__all__ = [
    "EigenSystem",
    "ModelConfig",
    "RegisterSpec",
    "ResultRow",
    "SweepGrid",
    "ThermalModel",
    "ThermoReport",
    "amplification_ratio",
    "asymptotic_ergotropy",
    "build_report",
    "classify",
    "compute_row",
    "effective_inverse_temperature",
    "eigh",
    "emit",
    "excess_ergotropy",
    "free_energy",
    "func_of_hermitian",
    "gibbs_state",
    "internal_energy",
    "load_config",
    "make_grid",
    "passive_state",
    "relative_entropy",
    "run_sweep",
    "s_thermalize",
    "sector_gibbs",
    "sector_probabilities",
    "shannon_entropy",
    "validate_hermitian",
    "von_neumann_entropy",
]

__version__ = "0.1.0"
