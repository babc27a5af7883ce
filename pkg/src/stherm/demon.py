"""Explicit register-assisted circuits for constrained thermalization.

The system is coupled to an ancilla register with one fiducial level plus
one level per symmetry sector (sector i sits on register level i + 1, so
the swap in the correlating unitary never collides with the fiducial
level).  Composite states live on system (x) register with system-major
ordering.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg, thermal
from .errors import DimensionMismatch, SpecMismatch
from .thermal import ThermalModel


@dataclass(frozen=True)
class RegisterSpec:
    num_sectors: int

    @property
    def dim(self) -> int:
        # fiducial level 0 plus one level per sector
        return self.num_sectors + 1


def _check_composite(composite, system_dim: int, reg: RegisterSpec) -> np.ndarray:
    rho = np.asarray(composite, dtype=complex)
    if rho.shape[0] != system_dim * reg.dim:
        raise DimensionMismatch(
            f"composite dim {rho.shape[0]} != {system_dim} * {reg.dim}"
        )
    return rho


def ptrace_register(composite, system_dim: int, reg: RegisterSpec) -> np.ndarray:
    rho = _check_composite(composite, system_dim, reg)
    r = rho.reshape(system_dim, reg.dim, system_dim, reg.dim)
    return np.einsum("ikjk->ij", r)


def ptrace_system(composite, system_dim: int, reg: RegisterSpec) -> np.ndarray:
    rho = _check_composite(composite, system_dim, reg)
    r = rho.reshape(system_dim, reg.dim, system_dim, reg.dim)
    return np.einsum("kikj->ij", r)


def correlate_unitary(sectors, reg: RegisterSpec) -> np.ndarray:
    """Controlled unitary writing the sector label into the register.

    For sector i the register levels 0 and i+1 are swapped; conditioned on
    a fiducial register the composite ends up with sector i correlated to
    register level i+1.
    """
    dim = int(sum(len(s) for s in sectors))
    sectors = thermal.validate_sectors(dim, sectors)
    if len(sectors) != reg.num_sectors:
        raise SpecMismatch(
            f"{len(sectors)} sectors but register expects {reg.num_sectors}"
        )
    u = np.zeros((dim * reg.dim, dim * reg.dim), dtype=complex)
    for i, idx in enumerate(sectors):
        swap = np.eye(reg.dim, dtype=complex)
        swap[[0, i + 1], [0, i + 1]] = 0.0
        swap[0, i + 1] = 1.0
        swap[i + 1, 0] = 1.0
        proj = np.zeros((dim, dim), dtype=complex)
        proj[idx, idx] = 1.0
        u += np.kron(proj, swap)
    return u


def attach_register(rho, reg: RegisterSpec) -> np.ndarray:
    """System state tensored with the fiducial register |0><0|."""
    fid = np.zeros((reg.dim, reg.dim), dtype=complex)
    fid[0, 0] = 1.0
    return np.kron(np.asarray(rho, dtype=complex), fid)


def demon_channel(model: ThermalModel, rho0, temp: float, reg: RegisterSpec) -> np.ndarray:
    """Correlate, measure the register, then thermalize within each sector.

    Output is sum_i p_i * (sector Gibbs) (x) |i+1><i+1| as a single
    ensemble-level composite state.
    """
    if reg.num_sectors != model.num_sectors:
        raise SpecMismatch(
            f"register has {reg.num_sectors} sector levels, model has {model.num_sectors}"
        )
    u = correlate_unitary(model.sectors, reg)
    composite = u @ attach_register(rho0, reg) @ u.conj().T
    d = model.dim
    out = np.zeros_like(composite)
    r = composite.reshape(d, reg.dim, d, reg.dim)
    for i in range(model.num_sectors):
        # projective measurement outcome i+1, then replace the conditional
        # system block with the sector Gibbs state
        pi = float(np.trace(r[:, i + 1, :, i + 1]).real)
        if pi <= 0:
            continue
        level = np.zeros((reg.dim, reg.dim), dtype=complex)
        level[i + 1, i + 1] = 1.0
        out += pi * np.kron(sector_thermal_block(model, i, temp), level)
    return out


def sector_thermal_block(model: ThermalModel, i: int, temp: float) -> np.ndarray:
    return thermal.sector_gibbs(model, i, temp)


def reset_unitary_path(composite, sectors, reg: RegisterSpec) -> np.ndarray:
    """Undo the correlating unitary, resetting the register to the fiducial level."""
    u = correlate_unitary(sectors, reg)
    rho = _check_composite(composite, sum(len(s) for s in sectors), reg)
    return u.conj().T @ rho @ u


def landauer_erase(composite, model: ThermalModel, temp: float, reg: RegisterSpec) -> np.ndarray:
    """Thermal randomization of the system, wiping the sector ensemble.

    The system marginal is replaced by the unconstrained Gibbs state; the
    register marginal is kept as is, and all correlations are destroyed.
    """
    rho = _check_composite(composite, model.dim, reg)
    reg_marginal = ptrace_system(rho, model.dim, reg)
    return np.kron(thermal.gibbs_state(model.hamiltonian, temp), reg_marginal)


def register_reset(composite, system_dim: int, reg: RegisterSpec) -> np.ndarray:
    """Reset the register to the fiducial level, leaving the system untouched."""
    rho = _check_composite(composite, system_dim, reg)
    return attach_register(ptrace_register(rho, system_dim, reg), reg)


def mutual_information(composite, system_dim: int, reg: RegisterSpec) -> float:
    """I(system : register) = S(sys) + S(reg) - S(composite), in nats."""
    rho = _check_composite(composite, system_dim, reg)
    s_sys = thermal.von_neumann_entropy(ptrace_register(rho, system_dim, reg))
    s_reg = thermal.von_neumann_entropy(ptrace_system(rho, system_dim, reg))
    return s_sys + s_reg - thermal.von_neumann_entropy(rho)
