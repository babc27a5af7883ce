"""Erasure bookkeeping: energy deviations, erasure entropy and classification.

All scalars for one (T0, T) pair are collected in a ThermoReport.  The
initial state is the thermal state at T0 unless an explicit state is
passed to the lower-level functions.
"""

import enum
from dataclasses import dataclass

import numpy as np

from . import thermal
from .thermal import ThermalModel

DENOM_TOL = 1e-10   # energy units; below this the amplification ratio is undefined
CLASS_TOL = 1e-8    # tolerance on |lambda - 1| for the break-even verdict


class Classification(str, enum.Enum):
    AMPLIFIED = "Amplified"
    MITIGATED = "Mitigated"
    BREAK_EVEN = "BreakEven"
    UNDEFINED = "Undefined"

    def __str__(self):
        return self.value


@dataclass
class ThermoReport:
    """Scalar bookkeeping for one (initial temperature, bath temperature) pair."""

    t0: float
    t: float
    e_ss: float
    e_gibbs: float
    e_initial: float
    s_ss: float
    s_gibbs: float
    s_initial: float
    rel_ent_ss_gibbs: float
    sector_probs: np.ndarray
    h_sectors: float
    delta_s_sys: float
    delta_s_bath: float
    erasure_cost: float
    lambda_: float | None
    classification: Classification


def energy_gap_info(model: ThermalModel, rho_ss, temp: float) -> float:
    """Information-theoretic form of the steady-state energy deviation.

    (S(rho_SS) - S(gibbs) + S(rho_SS || gibbs)) * T; equals the direct
    energy difference Tr(H rho_SS) - Tr(H gibbs).
    """
    beta = thermal.check_temperature(temp)
    gibbs = thermal.gibbs_state(model.hamiltonian, temp)
    s_ss = thermal.von_neumann_entropy(rho_ss)
    s_g = thermal.von_neumann_entropy(gibbs)
    rel = thermal.relative_entropy(rho_ss, gibbs)
    return (s_ss - s_g + rel) / beta


def delta_s_sys(model: ThermalModel, sector_probs, temp: float) -> float:
    """Entropy change of the system under erasure of the sector ensemble.

    S(gibbs at temp) minus the ensemble average of sector-Gibbs entropies.
    """
    p = np.asarray(sector_probs, dtype=float)
    gibbs = thermal.gibbs_state(model.hamiltonian, temp)
    s_g = thermal.von_neumann_entropy(gibbs)
    avg = 0.0
    for i, pi in enumerate(p):
        if pi > 0:
            pops = thermal.gibbs_populations(model.sector_spectra[i].eigenvalues, temp)
            avg += pi * thermal.shannon_entropy(pops)
    return s_g - avg


def delta_s_bath(model: ThermalModel, rho_ss, temp: float) -> float:
    """Entropy change of the bath during erasure: beta * (E(rho_SS) - E(gibbs))."""
    beta = thermal.check_temperature(temp)
    gibbs = thermal.gibbs_state(model.hamiltonian, temp)
    de = thermal.internal_energy(rho_ss, model.hamiltonian) - thermal.internal_energy(
        gibbs, model.hamiltonian
    )
    return beta * de


def erasure_cost(model: ThermalModel, rho0, temp: float) -> float:
    """Total entropic cost of erasing the sector ensemble.

    S(rho_SS) - sum_i p_i S(sector Gibbs) + S(rho_SS || gibbs); equals
    delta_s_sys + delta_s_bath.
    """
    rho_ss = thermal.s_thermalize(model, rho0, temp)
    gibbs = thermal.gibbs_state(model.hamiltonian, temp)
    p = thermal.sector_probabilities(rho0, model.sectors)
    avg = 0.0
    for i, pi in enumerate(p):
        if pi > 0:
            pops = thermal.gibbs_populations(model.sector_spectra[i].eigenvalues, temp)
            avg += pi * thermal.shannon_entropy(pops)
    return (
        thermal.von_neumann_entropy(rho_ss)
        - avg
        + thermal.relative_entropy(rho_ss, gibbs)
    )


def energy_gap_from_erasure(model: ThermalModel, rho0, temp: float) -> float:
    """Energy deviation recovered from erasure bookkeeping.

    (erasure cost - system entropy change) * T; equals the direct energy
    difference between the constrained and unconstrained steady states.
    """
    beta = thermal.check_temperature(temp)
    p = thermal.sector_probabilities(rho0, model.sectors)
    return (erasure_cost(model, rho0, temp) - delta_s_sys(model, p, temp)) / beta


def amplification_ratio(model: ThermalModel, rho0, t0: float, t: float) -> float | None:
    """Ratio of steady-state energy shifts relative to the initial thermal state.

    (E(rho_SS) - E(initial)) / (E(gibbs) - E(initial)); None when the
    denominator is below DENOM_TOL.
    """
    h = model.hamiltonian
    thermal.check_temperature(t0)
    rho_ss = thermal.s_thermalize(model, rho0, t)
    gibbs = thermal.gibbs_state(h, t)
    initial = thermal.gibbs_state(h, t0)
    e0 = thermal.internal_energy(initial, h)
    denom = thermal.internal_energy(gibbs, h) - e0
    if abs(denom) < DENOM_TOL:
        return None
    return (thermal.internal_energy(rho_ss, h) - e0) / denom


def classify(lambda_: float | None) -> Classification:
    """Amplified / Mitigated / BreakEven verdict from the ratio lambda."""
    if lambda_ is None:
        return Classification.UNDEFINED
    if lambda_ > 1.0 + CLASS_TOL:
        return Classification.AMPLIFIED
    if lambda_ < 1.0 - CLASS_TOL:
        return Classification.MITIGATED
    return Classification.BREAK_EVEN


def steady_populations(model: ThermalModel, t0: float, t: float):
    """Classical data of the constrained steady state in the energy eigenbasis.

    Returns (energies, initial populations, steady populations, sector
    probabilities), with energies concatenated sector by sector.  Valid
    because the initial thermal state, both steady states and every sector
    Gibbs state are simultaneously diagonal in that basis.
    """
    thermal.check_temperature(t0)
    thermal.check_temperature(t)
    spectra = model.sector_spectra
    energies = np.concatenate([sp.eigenvalues for sp in spectra])
    q0 = thermal.gibbs_populations(energies, t0)
    sizes = [len(sp.eigenvalues) for sp in spectra]
    bounds = np.cumsum([0] + sizes)
    p = np.array([np.sum(q0[bounds[i]:bounds[i + 1]]) for i in range(len(sizes))])
    r = np.concatenate(
        [
            p[i] * thermal.gibbs_populations(sp.eigenvalues, t)
            for i, sp in enumerate(spectra)
        ]
    )
    return energies, q0, r, p


def build_report(model: ThermalModel, t0: float, t: float) -> ThermoReport:
    """Full scalar report for initial thermal state at t0 and bath at t."""
    beta = thermal.check_temperature(t)
    spectra = model.sector_spectra
    energies, q0, r, p = steady_populations(model, t0, t)
    g = thermal.gibbs_populations(energies, t)

    e_ss = float(np.dot(r, energies))
    e_gibbs = float(np.dot(g, energies))
    e_initial = float(np.dot(q0, energies))
    s_ss = thermal.shannon_entropy(r)
    s_gibbs = thermal.shannon_entropy(g)
    s_initial = thermal.shannon_entropy(q0)
    nz = r > 0
    rel = float(np.sum(r[nz] * (np.log(r[nz]) - np.log(g[nz]))))
    rel = max(rel, 0.0)
    h_sectors = thermal.shannon_entropy(p)

    avg_sector_entropy = sum(
        p[i] * thermal.shannon_entropy(thermal.gibbs_populations(sp.eigenvalues, t))
        for i, sp in enumerate(spectra)
        if p[i] > 0
    )
    dss = s_gibbs - avg_sector_entropy
    dsb = beta * (e_ss - e_gibbs)
    cost = s_ss - avg_sector_entropy + rel

    denom = e_gibbs - e_initial
    lam = None if abs(denom) < DENOM_TOL else (e_ss - e_initial) / denom

    return ThermoReport(
        t0=float(t0),
        t=float(t),
        e_ss=e_ss,
        e_gibbs=e_gibbs,
        e_initial=e_initial,
        s_ss=s_ss,
        s_gibbs=s_gibbs,
        s_initial=s_initial,
        rel_ent_ss_gibbs=rel,
        sector_probs=p,
        h_sectors=h_sectors,
        delta_s_sys=dss,
        delta_s_bath=dsb,
        erasure_cost=cost,
        lambda_=lam,
        classification=classify(lam),
    )
