"""Work extraction from battery states.

Single-copy ergotropy via the passive-state construction, the entropy-matched
effective temperature, and the asymptotic (many-copy) ergotropy.  All three
depend only on the spectra of the state and the Hamiltonian, so each has a
spectrum-level core plus a dense-matrix wrapper.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import linalg, thermal
from .errors import (
    DegenerateEffectiveTemperature,
    DegenerateHamiltonian,
    DimensionMismatch,
    PureStateLimit,
)

ENTROPY_MATCH_TOL = 1e-10
ENTROPY_FLOOR = 1e-12
BETA_MAX_SCALE = 1e6
DEGENERACY_TOL = 1e-12


@dataclass
class PassiveDecomposition:
    passive_state: np.ndarray
    extracted_work: float
    sorted_populations: np.ndarray  # descending


@dataclass
class EffectiveTemperature:
    beta_star: float  # math.inf marks an effectively pure state
    entropy_residual: float


def _entropy_of_beta(energies: np.ndarray, beta: float) -> float:
    w = np.exp(-beta * (energies - energies[0]))
    p = w / np.sum(w)
    nz = p[p > 0]
    return float(-np.sum(nz * np.log(nz)))


def ergotropy_from_spectra(populations, energies) -> float:
    """Ergotropy from the spectrum of the state and the energy levels.

    The work released by rearranging populations descending against
    energies ascending; the state's populations are given in the same
    order as ``energies``.
    """
    pops = np.asarray(populations, dtype=float)
    e = np.asarray(energies, dtype=float)
    order = np.argsort(e, kind="stable")
    passive = np.sort(pops.clip(0.0))[::-1]
    work = float(np.dot(pops, e) - np.dot(passive, e[order]))
    return max(work, 0.0)


def effective_beta_from_spectra(populations, energies) -> EffectiveTemperature:
    """Inverse temperature whose Gibbs entropy matches the state's entropy.

    Bisection on [0, beta_max]; Gibbs entropy decreases monotonically in
    beta from ln(dim) down to the ground-degeneracy entropy.
    """
    e = np.sort(np.asarray(energies, dtype=float))
    span = e[-1] - e[0]
    if span <= DEGENERACY_TOL:
        raise DegenerateHamiltonian(
            "all energies equal; every Gibbs state has the same entropy"
        )
    target = thermal.shannon_entropy(populations)
    if target >= math.log(len(e)) - ENTROPY_FLOOR:
        return EffectiveTemperature(0.0, _entropy_of_beta(e, 0.0) - target)
    beta_max = BETA_MAX_SCALE / span
    if target <= ENTROPY_FLOOR or target < _entropy_of_beta(e, beta_max):
        return EffectiveTemperature(math.inf, math.nan)
    lo, hi = 0.0, beta_max
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        s_mid = _entropy_of_beta(e, mid)
        if abs(s_mid - target) < 1e-15:
            lo = hi = mid
            break
        if s_mid > target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15 * max(hi, 1.0):
            break
    beta_star = 0.5 * (lo + hi)
    return EffectiveTemperature(beta_star, _entropy_of_beta(e, beta_star) - target)


def asymptotic_from_spectra(populations, energies) -> float:
    """Asymptotic ergotropy S(p || gibbs(beta*)) / beta* from spectra."""
    pops = np.asarray(populations, dtype=float).clip(0.0)
    e = np.asarray(energies, dtype=float)
    eff = effective_beta_from_spectra(pops, e)
    if math.isinf(eff.beta_star):
        raise PureStateLimit("state is effectively pure; asymptotic work diverges")
    if eff.beta_star == 0.0:
        uniform = np.full(len(e), 1.0 / len(e))
        nz = pops > 0
        rel = float(np.sum(pops[nz] * (np.log(pops[nz]) - np.log(uniform[nz]))))
        if rel > thermal.SUPPORT_TOL:
            raise DegenerateEffectiveTemperature(
                "beta* = 0 but the state is not maximally mixed"
            )
        return 0.0
    g = thermal.gibbs_populations(e, 1.0 / eff.beta_star)
    nz = pops > 0
    rel = float(np.sum(pops[nz] * (np.log(pops[nz]) - np.log(g[nz]))))
    return max(rel, 0.0) / eff.beta_star


def passive_state(rho, h) -> PassiveDecomposition:
    """Optimal unitary rearrangement of a state's spectrum against the energies.

    Populations sorted descending are paired with energies sorted ascending;
    the energy released by the rearrangement is the ergotropy.
    """
    rho = np.asarray(rho, dtype=complex)
    h = np.asarray(h, dtype=complex)
    if rho.shape != h.shape:
        raise DimensionMismatch(f"shapes {rho.shape} vs {h.shape}")
    energies, basis = linalg.eigh(h)
    pops = np.sort(linalg.eigh(rho).eigenvalues.clip(0.0))[::-1]
    passive = (basis * pops) @ basis.conj().T
    work = thermal.internal_energy(rho, h) - float(np.dot(pops, energies))
    return PassiveDecomposition(passive, max(work, 0.0), pops)


def ergotropy(rho, h) -> float:
    """Maximum unitarily extractable work from a single copy."""
    return passive_state(rho, h).extracted_work


def effective_inverse_temperature(rho, h) -> EffectiveTemperature:
    """Entropy-matched inverse temperature for a dense state and Hamiltonian."""
    rho = np.asarray(rho, dtype=complex)
    h = np.asarray(h, dtype=complex)
    if rho.shape != h.shape:
        raise DimensionMismatch(f"shapes {rho.shape} vs {h.shape}")
    pops = linalg.eigh(rho).eigenvalues.clip(0.0)
    pops = pops / np.sum(pops)
    return effective_beta_from_spectra(pops, linalg.eigh(h).eigenvalues)


def asymptotic_ergotropy(rho, h) -> float:
    """Per-copy extractable work in the many-copy limit.

    S(rho || gibbs at beta*) / beta* with beta* matched to the entropy of
    ``rho``; exactly 0 for the maximally mixed state (beta* = 0).
    """
    h = np.asarray(h, dtype=complex)
    eff = effective_inverse_temperature(rho, h)
    if math.isinf(eff.beta_star):
        raise PureStateLimit("state is effectively pure; asymptotic work diverges")
    if eff.beta_star == 0.0:
        dim = h.shape[0]
        rel = thermal.relative_entropy(rho, np.eye(dim) / dim)
        if rel > thermal.SUPPORT_TOL:
            raise DegenerateEffectiveTemperature(
                "beta* = 0 but the state is not maximally mixed"
            )
        return 0.0
    sigma = thermal.gibbs_state(h, 1.0 / eff.beta_star)
    return thermal.relative_entropy(rho, sigma) / eff.beta_star


def excess_ergotropy(rho, h) -> float:
    """Gap between asymptotic and single-copy ergotropy."""
    return asymptotic_ergotropy(rho, h) - ergotropy(rho, h)
