import numpy as np
import pytest

from stherm.thermal import ThermalModel

FOUR_LEVEL_ENERGIES = [0.0, 0.1, 0.2, 1.0]
FOUR_LEVEL_SECTORS = [[0, 2], [1, 3]]


@pytest.fixture
def four_level_model():
    return ThermalModel(np.diag(FOUR_LEVEL_ENERGIES).astype(complex), FOUR_LEVEL_SECTORS)


def random_block_model(rng, dim=None, num_sectors=None) -> ThermalModel:
    """Seeded random Hermitian block-diagonal model with 2-3 sectors."""
    if dim is None:
        dim = int(rng.integers(3, 9))
    if num_sectors is None:
        num_sectors = int(rng.integers(2, min(dim, 3) + 1))
    perm = rng.permutation(dim)
    cuts = np.sort(rng.choice(np.arange(1, dim), size=num_sectors - 1, replace=False))
    sectors = [list(map(int, s)) for s in np.split(perm, cuts)]
    h = np.zeros((dim, dim), dtype=complex)
    for sec in sectors:
        n = len(sec)
        block = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        block = 0.5 * (block + block.conj().T)
        h[np.ix_(sec, sec)] = block
    return ThermalModel(h, sectors)


def random_density_matrix(rng, dim: int) -> np.ndarray:
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real
