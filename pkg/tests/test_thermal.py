import numpy as np
import pytest

from conftest import FOUR_LEVEL_ENERGIES, random_block_model, random_density_matrix
from stherm import errors, thermal
from stherm.thermal import ThermalModel


class TestGibbsState:
    def test_four_level_populations(self):
        h = np.diag(FOUR_LEVEL_ENERGIES)
        rho = thermal.gibbs_state(h, 1.0)
        raw = np.exp(-np.array(FOUR_LEVEL_ENERGIES))
        np.testing.assert_allclose(np.diag(rho).real, raw / raw.sum(), atol=1e-12)
        assert abs(raw.sum() - 3.0914) < 2e-4

    def test_infinite_temperature_limit(self):
        rho = thermal.gibbs_state(np.diag(FOUR_LEVEL_ENERGIES), 1e6)
        np.testing.assert_allclose(np.diag(rho).real, 0.25, atol=1e-5)

    def test_low_temperature_limit(self):
        rho = thermal.gibbs_state(np.diag([0.0, 5.0]), 0.1)
        assert rho[0, 0].real >= 1 - np.exp(-50)

    def test_rejects_nonpositive_temperature(self):
        for bad in (0.0, -1.0, np.inf):
            with pytest.raises(errors.ValidationError):
                thermal.gibbs_state(np.diag([0.0, 1.0]), bad)


class TestSectorGibbs:
    def test_even_sector(self, four_level_model):
        rho = thermal.sector_gibbs(four_level_model, 0, 1.0)
        z_even = 1 + np.exp(-0.2)
        assert abs(z_even - 1.8187) < 1e-4
        np.testing.assert_allclose(
            np.diag(rho).real, [1 / z_even, 0, np.exp(-0.2) / z_even, 0], atol=1e-12
        )

    def test_odd_sector(self, four_level_model):
        rho = thermal.sector_gibbs(four_level_model, 1, 1.0)
        z_odd = np.exp(-0.1) + np.exp(-1.0)
        np.testing.assert_allclose(
            np.diag(rho).real, [0, np.exp(-0.1) / z_odd, 0, np.exp(-1.0) / z_odd],
            atol=1e-12,
        )

    def test_singleton_sector_is_projector(self):
        model = ThermalModel(np.diag([0.0, 1.0, 2.0]), [[1], [0, 2]])
        rho = thermal.sector_gibbs(model, 0, 0.3)
        expected = np.zeros((3, 3))
        expected[1, 1] = 1.0
        np.testing.assert_allclose(rho, expected, atol=1e-14)

    def test_invalid_sector_index(self, four_level_model):
        with pytest.raises(errors.InvalidSector):
            thermal.sector_gibbs(four_level_model, 5, 1.0)


class TestSectorProbabilities:
    def test_maximally_mixed(self, four_level_model):
        p = thermal.sector_probabilities(np.eye(4) / 4, four_level_model.sectors)
        np.testing.assert_allclose(p, [0.5, 0.5], atol=1e-14)

    def test_initial_gibbs_four_level(self, four_level_model):
        rho0 = thermal.gibbs_state(four_level_model.hamiltonian, 0.05)
        p = thermal.sector_probabilities(rho0, four_level_model.sectors)
        np.testing.assert_allclose(p, [0.8827, 0.1173], atol=1e-4)

    def test_pure_state_in_one_sector(self, four_level_model):
        rho = np.zeros((4, 4))
        rho[0, 0] = 1.0
        p = thermal.sector_probabilities(rho, four_level_model.sectors)
        np.testing.assert_allclose(p, [1.0, 0.0], atol=1e-14)


class TestSThermalize:
    def test_same_temperature_recombines(self, four_level_model):
        rho0 = thermal.gibbs_state(four_level_model.hamiltonian, 0.7)
        out = thermal.s_thermalize(four_level_model, rho0, 0.7)
        assert np.max(np.abs(out - rho0)) <= 1e-12

    def test_four_level_point(self, four_level_model):
        rho0 = thermal.gibbs_state(four_level_model.hamiltonian, 0.05)
        out = thermal.s_thermalize(four_level_model, rho0, 1.0)
        # frozen from the scalar oracle (tests/oracle.py)
        np.testing.assert_allclose(
            np.diag(out).real,
            [0.48533273498725, 0.0834017914369611, 0.397356835609508, 0.0339086379662817],
            atol=1e-12,
        )

    def test_trivial_decomposition(self):
        h = np.diag(FOUR_LEVEL_ENERGIES)
        model = ThermalModel(h, [[0, 1, 2, 3]])
        rho0 = thermal.gibbs_state(h, 0.05)
        out = thermal.s_thermalize(model, rho0, 1.0)
        np.testing.assert_allclose(out, thermal.gibbs_state(h, 1.0), atol=1e-12)

    def test_dimension_mismatch(self, four_level_model):
        with pytest.raises(errors.DimensionMismatch):
            thermal.s_thermalize(four_level_model, np.eye(3) / 3, 1.0)

    @pytest.mark.parametrize("seed", range(5))
    def test_preserves_sector_probabilities(self, seed):
        rng = np.random.default_rng(seed)
        model = random_block_model(rng)
        rho0 = random_density_matrix(rng, model.dim)
        p_before = thermal.sector_probabilities(rho0, model.sectors)
        out = thermal.s_thermalize(model, rho0, 0.8)
        p_after = thermal.sector_probabilities(out, model.sectors)
        np.testing.assert_allclose(p_before, p_after, atol=1e-12)


class TestEntropies:
    def test_pure_state(self):
        rho = np.zeros((3, 3))
        rho[2, 2] = 1.0
        assert thermal.von_neumann_entropy(rho) == 0.0

    def test_maximally_mixed(self):
        assert abs(thermal.von_neumann_entropy(np.eye(4) / 4) - np.log(4)) <= 1e-12

    def test_four_level_steady_state_entropy(self):
        pops = [0.48533273498725, 0.0834017914369611, 0.397356835609508,
                0.0339086379662817]
        # frozen from the scalar oracle
        assert abs(thermal.von_neumann_entropy(np.diag(pops)) - 1.0395127258268751) <= 1e-12

    def test_shannon_basics(self):
        assert thermal.shannon_entropy([1.0, 0.0]) == 0.0
        assert abs(thermal.shannon_entropy([0.5, 0.5]) - np.log(2)) <= 1e-14
        # frozen from the scalar oracle
        assert abs(thermal.shannon_entropy([0.8827, 0.1173]) - 0.3615106866017705) <= 1e-12

    def test_shannon_rejects_garbage(self):
        with pytest.raises(errors.NotAProbabilityVector):
            thermal.shannon_entropy([0.7, 0.7])
        with pytest.raises(errors.NotAProbabilityVector):
            thermal.shannon_entropy([1.5, -0.5])

    def test_block_entropy_decomposition(self, four_level_model):
        rho0 = thermal.gibbs_state(four_level_model.hamiltonian, 0.05)
        p = thermal.sector_probabilities(rho0, four_level_model.sectors)
        rho_ss = thermal.s_thermalize(four_level_model, rho0, 1.0)
        total = thermal.von_neumann_entropy(rho_ss)
        parts = thermal.shannon_entropy(p) + sum(
            pi * thermal.von_neumann_entropy(thermal.sector_gibbs(four_level_model, i, 1.0))
            for i, pi in enumerate(p)
        )
        assert abs(total - parts) <= 1e-10


class TestRelativeEntropy:
    def test_self_is_zero(self):
        rng = np.random.default_rng(11)
        rho = random_density_matrix(rng, 4)
        assert thermal.relative_entropy(rho, rho) <= 1e-10

    def test_classical_two_point(self):
        rel = thermal.relative_entropy(np.diag([1.0, 0.0]), np.diag([0.5, 0.5]))
        assert abs(rel - np.log(2)) <= 1e-12

    def test_four_level_point_against_oracle(self, four_level_model):
        rho0 = thermal.gibbs_state(four_level_model.hamiltonian, 0.05)
        rho_ss = thermal.s_thermalize(four_level_model, rho0, 1.0)
        gibbs = thermal.gibbs_state(four_level_model.hamiltonian, 1.0)
        # frozen from the scalar oracle
        assert abs(thermal.relative_entropy(rho_ss, gibbs) - 0.21084692255104089) <= 1e-12

    def test_support_violation(self):
        rho = np.diag([0.5, 0.5])
        sigma = np.diag([1.0, 0.0])
        with pytest.raises(errors.SupportViolation):
            thermal.relative_entropy(rho, sigma)

    @pytest.mark.parametrize("seed", range(10))
    def test_nonnegative(self, seed):
        rng = np.random.default_rng(seed)
        rho = random_density_matrix(rng, 5)
        sigma = random_density_matrix(rng, 5)
        assert thermal.relative_entropy(rho, sigma) >= 0.0


class TestEnergiesAndFreeEnergy:
    def test_ground_state_projector(self):
        h = np.diag([0.3, 1.0, 2.0])
        rho = np.zeros((3, 3))
        rho[0, 0] = 1.0
        assert abs(thermal.internal_energy(rho, h) - 0.3) <= 1e-14

    def test_maximally_mixed_four_level(self):
        h = np.diag(FOUR_LEVEL_ENERGIES)
        assert abs(thermal.internal_energy(np.eye(4) / 4, h) - 0.325) <= 1e-14

    def test_four_level_steady_state_energy(self, four_level_model):
        rho0 = thermal.gibbs_state(four_level_model.hamiltonian, 0.05)
        rho_ss = thermal.s_thermalize(four_level_model, rho0, 1.0)
        # frozen from the scalar oracle
        assert abs(
            thermal.internal_energy(rho_ss, four_level_model.hamiltonian) - 0.12172018423187931
        ) <= 1e-12

    def test_equilibrium_free_energy_identity(self):
        h = np.diag(FOUR_LEVEL_ENERGIES)
        for temp in (0.3, 1.0, 2.5):
            omega = thermal.gibbs_state(h, temp)
            direct = thermal.free_energy(omega, h, temp)
            from_z = -thermal.log_partition_function(h, temp) * temp
            assert abs(direct - from_z) <= 1e-10

    def test_pure_ground_state_free_energy(self):
        h = np.diag([0.5, 1.0])
        rho = np.diag([1.0, 0.0])
        assert abs(thermal.free_energy(rho, h, 0.7) - 0.5) <= 1e-12

    @pytest.mark.parametrize("seed", range(4))
    def test_gibbs_minimizes_free_energy(self, seed):
        rng = np.random.default_rng(seed)
        model = random_block_model(rng)
        h = model.hamiltonian
        temp = float(rng.uniform(0.2, 2.0))
        f_gibbs = thermal.free_energy(thermal.gibbs_state(h, temp), h, temp)
        for _ in range(100):
            rho = random_density_matrix(rng, model.dim)
            assert thermal.free_energy(rho, h, temp) >= f_gibbs - 1e-10

    def test_free_energy_gap_identity(self, four_level_model):
        h = four_level_model.hamiltonian
        rho0 = thermal.gibbs_state(h, 0.05)
        rho_ss = thermal.s_thermalize(four_level_model, rho0, 1.0)
        gibbs = thermal.gibbs_state(h, 1.0)
        gap = thermal.free_energy(rho_ss, h, 1.0) - thermal.free_energy(gibbs, h, 1.0)
        assert abs(gap - thermal.relative_entropy(rho_ss, gibbs)) <= 1e-9


class TestThermalModelValidation:
    def test_rejects_cross_sector_coupling(self):
        h = np.diag([0.0, 1.0]).astype(complex)
        h[0, 1] = h[1, 0] = 0.1
        with pytest.raises(errors.ValidationError):
            ThermalModel(h, [[0], [1]])

    def test_rejects_overlapping_sectors(self):
        with pytest.raises(errors.InvalidSector):
            ThermalModel(np.diag([0.0, 1.0, 2.0]), [[0, 1], [1, 2]])

    def test_rejects_incomplete_partition(self):
        with pytest.raises(errors.InvalidSector):
            ThermalModel(np.diag([0.0, 1.0, 2.0]), [[0, 1]])

    def test_density_matrix_validation(self):
        with pytest.raises(errors.NotADensityMatrix):
            thermal.validate_density_matrix(np.diag([0.7, 0.7]))
        with pytest.raises(errors.NotADensityMatrix):
            thermal.validate_density_matrix(np.diag([1.5, -0.5]))
