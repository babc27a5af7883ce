"""Gibbs states, sector-restricted Gibbs states and the constrained steady state.

Conventions: k_B = 1 throughout, natural logarithms, entropies in nats.
Density matrices and Hamiltonians are plain complex numpy arrays; sectors
are index sets over the computational basis.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import linalg
from .errors import (
    DimensionMismatch,
    InvalidSector,
    NotADensityMatrix,
    NotAProbabilityVector,
    SupportViolation,
    ValidationError,
)

TRACE_TOL = 1e-10
EIGENVALUE_CLAMP = -1e-12
SUPPORT_TOL = 1e-12
BLOCK_TOL = 1e-10


def check_temperature(temp: float) -> float:
    """Validate a strictly positive finite temperature and return 1/T."""
    t = float(temp)
    if not np.isfinite(t) or t <= 0.0:
        raise ValidationError(f"temperature must be positive and finite, got {temp}")
    return 1.0 / t


def validate_sectors(dim: int, sectors) -> list[np.ndarray]:
    """Check that ``sectors`` is a partition of {0..dim-1} into non-empty sets."""
    seen = set()
    out = []
    for k, sec in enumerate(sectors):
        idx = sorted(int(i) for i in sec)
        if not idx:
            raise InvalidSector(f"sector {k} is empty")
        for i in idx:
            if i < 0 or i >= dim:
                raise InvalidSector(f"sector {k} contains out-of-range index {i}")
            if i in seen:
                raise InvalidSector(f"index {i} appears in more than one sector")
            seen.add(i)
        out.append(np.array(idx, dtype=int))
    if len(seen) != dim:
        missing = sorted(set(range(dim)) - seen)
        raise InvalidSector(f"sectors do not cover all indices; missing {missing}")
    return out


def validate_density_matrix(m) -> np.ndarray:
    """Validate unit trace and positivity (up to round-off) of a state."""
    rho = linalg.validate_hermitian(m)
    tr = np.trace(rho).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise NotADensityMatrix(f"trace is {tr}, expected 1 within {TRACE_TOL:.0e}")
    w = linalg.eigh(rho).eigenvalues
    if np.min(w) < EIGENVALUE_CLAMP:
        raise NotADensityMatrix(f"negative eigenvalue {np.min(w):.3e}")
    return rho


@dataclass
class SectorSpectrum:
    """Per-sector eigendata of a block-diagonal Hamiltonian."""

    indices: np.ndarray       # basis indices of the sector
    eigenvalues: np.ndarray   # ascending
    eigenvectors: np.ndarray  # columns, within the sector block


@dataclass
class ThermalModel:
    """A Hamiltonian together with the symmetry sectors it is block-diagonal in."""

    hamiltonian: np.ndarray
    sectors: list = field(default_factory=list)

    def __post_init__(self):
        self.hamiltonian = linalg.validate_hermitian(self.hamiltonian)
        self.sectors = validate_sectors(self.dim, self.sectors)
        h = self.hamiltonian
        for a, sec_a in enumerate(self.sectors):
            for sec_b in self.sectors[a + 1:]:
                block = h[np.ix_(sec_a, sec_b)]
                if block.size and np.max(np.abs(block)) > BLOCK_TOL:
                    raise ValidationError(
                        f"Hamiltonian couples different sectors "
                        f"(|H[a,b]| = {np.max(np.abs(block)):.3e} > {BLOCK_TOL:.0e})"
                    )

    @property
    def dim(self) -> int:
        return self.hamiltonian.shape[0]

    @property
    def num_sectors(self) -> int:
        return len(self.sectors)

    @cached_property
    def sector_spectra(self) -> list[SectorSpectrum]:
        out = []
        for idx in self.sectors:
            w, v = linalg.eigh(self.hamiltonian[np.ix_(idx, idx)])
            out.append(SectorSpectrum(idx, w, v))
        return out

    def projector(self, i: int) -> np.ndarray:
        p = np.zeros((self.dim, self.dim), dtype=complex)
        p[self.sectors[i], self.sectors[i]] = 1.0
        return p


def gibbs_populations(eigenvalues: np.ndarray, temp: float) -> np.ndarray:
    """Boltzmann weights over a spectrum, normalized; overflow-safe via shift."""
    beta = check_temperature(temp)
    w = np.exp(-beta * (eigenvalues - np.min(eigenvalues)))
    return w / np.sum(w)


def gibbs_state(h, temp: float) -> np.ndarray:
    """Thermal state e^{-H/T} / Z as a dense density matrix."""
    w, v = linalg.eigh(h)
    pops = gibbs_populations(w, temp)
    return (v * pops) @ v.conj().T


def log_partition_function(h, temp: float) -> float:
    """ln Tr e^{-H/T}, overflow-safe."""
    beta = check_temperature(temp)
    w = linalg.eigh(h).eigenvalues
    shift = np.min(w)
    return float(np.log(np.sum(np.exp(-beta * (w - shift)))) - beta * shift)


def sector_gibbs(model: ThermalModel, sector_index: int, temp: float) -> np.ndarray:
    """Gibbs state of H restricted to one symmetry sector, embedded in full space."""
    if not 0 <= sector_index < model.num_sectors:
        raise InvalidSector(f"sector index {sector_index} out of range")
    spec = model.sector_spectra[sector_index]
    pops = gibbs_populations(spec.eigenvalues, temp)
    block = (spec.eigenvectors * pops) @ spec.eigenvectors.conj().T
    rho = np.zeros((model.dim, model.dim), dtype=complex)
    rho[np.ix_(spec.indices, spec.indices)] = block
    return rho


def sector_probabilities(rho0, sectors) -> np.ndarray:
    """p_i = Tr(P_i rho0) for each sector of a decomposition."""
    rho = np.asarray(rho0, dtype=complex)
    if isinstance(sectors, ThermalModel):
        sectors = sectors.sectors
    else:
        sectors = validate_sectors(rho.shape[0], sectors)
    if sectors and max(int(np.max(s)) for s in sectors) >= rho.shape[0]:
        raise DimensionMismatch("sector indices exceed state dimension")
    diag = np.real(np.diag(rho))
    p = np.array([np.sum(diag[idx]) for idx in sectors])
    if abs(np.sum(p) - 1.0) > TRACE_TOL:
        raise DimensionMismatch(
            f"sector probabilities sum to {np.sum(p)}, state trace is off"
        )
    return p


def s_thermalize(model: ThermalModel, rho0, temp: float) -> np.ndarray:
    """Steady state of symmetry-constrained thermalization.

    Each sector keeps its initial weight and thermalizes internally:
    the result is sum_i p_i * (sector Gibbs state at ``temp``).
    """
    rho = np.asarray(rho0, dtype=complex)
    if rho.shape != model.hamiltonian.shape:
        raise DimensionMismatch(
            f"state shape {rho.shape} vs model dim {model.dim}"
        )
    p = sector_probabilities(rho, model.sectors)
    out = np.zeros_like(rho)
    for i, pi in enumerate(p):
        if pi > 0:
            out += pi * sector_gibbs(model, i, temp)
    return out


def _clamped_spectrum(rho) -> np.ndarray:
    w = linalg.eigh(rho).eigenvalues
    if np.min(w) < EIGENVALUE_CLAMP:
        raise NotADensityMatrix(f"negative eigenvalue {np.min(w):.3e}")
    return np.clip(w, 0.0, None)


def shannon_entropy(p) -> float:
    """H(p) = -sum p ln p with the 0 ln 0 = 0 convention."""
    p = np.asarray(p, dtype=float)
    if np.any(p < -1e-12) or abs(np.sum(p) - 1.0) > TRACE_TOL:
        raise NotAProbabilityVector(f"not a probability vector: {p}")
    p = np.clip(p, 0.0, None)
    nz = p[p > 0]
    return float(-np.sum(nz * np.log(nz)))


def von_neumann_entropy(rho) -> float:
    """S(rho) = -Tr(rho ln rho) in nats."""
    w = _clamped_spectrum(rho)
    nz = w[w > 0]
    return float(-np.sum(nz * np.log(nz)))


def relative_entropy(rho, sigma) -> float:
    """Quantum relative entropy S(rho || sigma) = -S(rho) - Tr(rho ln sigma).

    Raises SupportViolation when rho has weight outside the support of sigma.
    """
    rho = np.asarray(rho, dtype=complex)
    sigma = np.asarray(sigma, dtype=complex)
    if rho.shape != sigma.shape:
        raise DimensionMismatch(f"shapes {rho.shape} vs {sigma.shape}")
    sw, sv = linalg.eigh(sigma)
    sw = np.clip(sw, 0.0, None)
    overlap = np.real(np.einsum("ji,jk,ki->i", sv.conj(), rho, sv))
    small = sw <= SUPPORT_TOL
    if np.any(small) and np.max(overlap[small], initial=0.0) > SUPPORT_TOL:
        raise SupportViolation(
            "rho has weight on a direction where sigma vanishes"
        )
    keep = ~small
    cross = float(np.sum(overlap[keep] * np.log(sw[keep])))
    return max(-von_neumann_entropy(rho) - cross, 0.0)


def internal_energy(rho, h) -> float:
    """E(rho) = Tr(H rho)."""
    rho = np.asarray(rho, dtype=complex)
    h = np.asarray(h, dtype=complex)
    if rho.shape != h.shape:
        raise DimensionMismatch(f"shapes {rho.shape} vs {h.shape}")
    return float(np.trace(h @ rho).real)


def free_energy(rho, h, temp: float) -> float:
    """F(rho) = E(rho) - T S(rho) with respect to a bath at ``temp``."""
    beta = check_temperature(temp)
    return internal_energy(rho, h) - von_neumann_entropy(rho) / beta
