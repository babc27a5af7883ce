"""Self-consistency checks for the register-circuit construction."""

from dataclasses import dataclass

import numpy as np

from . import demon, linalg, thermal
from .demon import RegisterSpec
from .thermal import ThermalModel


@dataclass
class CheckResult:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


def trace_distance(a, b) -> float:
    diff = np.asarray(a, dtype=complex) - np.asarray(b, dtype=complex)
    return 0.5 * float(np.sum(np.abs(linalg.eigh(diff).eigenvalues)))


def demon_check(model: ThermalModel, t0: float, t: float) -> list[CheckResult]:
    """Run every circuit invariant at one (t0, t) point."""
    reg = RegisterSpec(model.num_sectors)
    d = model.dim
    rho0 = thermal.gibbs_state(model.hamiltonian, t0)
    gibbs = thermal.gibbs_state(model.hamiltonian, t)
    rho_ss = thermal.s_thermalize(model, rho0, t)
    p = thermal.sector_probabilities(rho0, model.sectors)

    u = demon.correlate_unitary(model.sectors, reg)
    unitarity = float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))

    correlated = demon.demon_channel(model, rho0, t, reg)
    sys_marginal = demon.ptrace_register(correlated, d, reg)
    consistency = trace_distance(sys_marginal, rho_ss)

    # pathway (b): unitary register reset, then thermalize the system
    after_reset = demon.reset_unitary_path(correlated, model.sectors, reg)
    reset_sys = demon.ptrace_register(after_reset, d, reg)
    reset_gap = trace_distance(reset_sys, rho_ss)
    reg_after_reset = demon.ptrace_system(after_reset, d, reg)
    reg_purity_gap = abs(float(np.trace(reg_after_reset @ reg_after_reset).real) - 1.0)
    path_b = demon.landauer_erase(after_reset, model, t, reg)
    path_b_gap = trace_distance(demon.ptrace_register(path_b, d, reg), gibbs)

    # pathway (c): erase the system first, then reset the register
    erased = demon.landauer_erase(correlated, model, t, reg)
    path_c = demon.register_reset(erased, d, reg)
    path_c_gap = trace_distance(demon.ptrace_register(path_c, d, reg), gibbs)
    pathway_gap = trace_distance(
        demon.ptrace_register(path_b, d, reg), demon.ptrace_register(path_c, d, reg)
    )

    mi_after_erase = demon.mutual_information(erased, d, reg)
    mi_correlated = demon.mutual_information(correlated, d, reg)
    h_p = thermal.shannon_entropy(p)

    # entropy drop at the correlation step: ensemble average of the sector
    # branches versus the recombined steady state
    avg_branch_entropy = sum(
        pi * thermal.von_neumann_entropy(thermal.sector_gibbs(model, i, t))
        for i, pi in enumerate(p)
        if pi > 0
    )
    entropy_drop_gap = abs(
        thermal.von_neumann_entropy(rho_ss) - avg_branch_entropy - h_p
    )

    return [
        CheckResult("correlate_unitary unitarity", unitarity, 1e-10),
        CheckResult("demon marginal vs constrained steady state", consistency, 1e-12),
        CheckResult("unitary reset recovers steady state", reset_gap, 1e-12),
        CheckResult("register purity after unitary reset", reg_purity_gap, 1e-10),
        CheckResult("pathway (b) reaches the Gibbs state", path_b_gap, 1e-10),
        CheckResult("pathway (c) reaches the Gibbs state", path_c_gap, 1e-10),
        CheckResult("pathway (b) vs (c) marginals", pathway_gap, 1e-10),
        CheckResult("mutual information after erasure", mi_after_erase, 1e-10),
        CheckResult("correlation step stores H(p)", abs(mi_correlated - h_p), 1e-10),
        CheckResult("entropy drop equals H(p)", entropy_drop_gap, 1e-10),
    ]
