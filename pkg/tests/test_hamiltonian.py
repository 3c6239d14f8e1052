import numpy as np
import pytest
from numpy.testing import assert_allclose

from xxzsim import ModelParams, build_hamiltonian, spectral_decomposition

from conftest import random_params


def pauli_hamiltonian(params):
    """Independent oracle: assemble the Hamiltonian from Pauli tensor products."""
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    eye = np.eye(2, dtype=complex)
    k = np.kron
    return (params.Jz * k(sz, sz)
            + params.J * (k(sx, sx) + k(sy, sy))
            + params.Dz * (k(sx, sy) - k(sy, sx))
            + params.Gz * (k(sx, sy) + k(sy, sx))
            + params.B * (k(sz, eye) + k(eye, sz)))


class TestModelParams:
    def test_chi_omega(self):
        p = ModelParams(J=0.5, Jz=0.0, B=0.1, Dz=0.1, Gz=0.5)
        assert p.chi() == pytest.approx(1.019803902718557, abs=1e-12)
        assert p.omega() == pytest.approx(1.019803902718557, abs=1e-12)

    def test_negative_field_rejected(self):
        with pytest.raises(ValueError):
            ModelParams(B=-0.1)

    def test_non_finite_rejected(self):
        for bad in (np.nan, np.inf, -np.inf):
            with pytest.raises(ValueError):
                ModelParams(J=bad)


class TestBuildHamiltonian:
    def test_all_couplings_off(self):
        assert_allclose(build_hamiltonian(ModelParams()), np.zeros((4, 4)), atol=0)

    def test_only_axial_exchange(self):
        H = build_hamiltonian(ModelParams(Jz=1.0))
        assert_allclose(H, np.diag([1.0, -1.0, -1.0, 1.0]), atol=0)

    def test_entry_template(self):
        H = build_hamiltonian(ModelParams(J=0.5, Jz=0.3, B=0.1, Dz=0.1, Gz=0.5))
        assert H[0, 3] == pytest.approx(-1.0j, abs=1e-15)
        assert H[1, 2] == pytest.approx(1.0 + 0.2j, abs=1e-15)
        assert H[0, 0] == pytest.approx(0.5, abs=1e-15)

    def test_matches_pauli_oracle(self, rng):
        for params in random_params(rng, 100):
            assert_allclose(build_hamiltonian(params), pauli_hamiltonian(params), atol=1e-12)

    def test_hermitian(self, rng):
        for params in random_params(rng, 50):
            H = build_hamiltonian(params)
            assert np.abs(H - H.conj().T).max() < 1e-12


class TestSpectralDecomposition:
    def test_zero_params_gives_computational_basis(self):
        spec = spectral_decomposition(ModelParams())
        assert_allclose(spec.eigenvalues, np.zeros(4), atol=0)
        assert_allclose(spec.eigenvectors, np.eye(4), atol=0)

    def test_equal_gap_scales(self):
        spec = spectral_decomposition(ModelParams(J=0.5, Jz=0.0, B=0.1, Dz=0.1, Gz=0.5))
        chi = 1.019803902718557
        assert_allclose(spec.eigenvalues, [chi, chi, -chi, -chi], atol=1e-12)

    def test_degenerate_inner_block(self):
        # J = Dz = 0: the (du, ud) block is diagonal already.
        spec = spectral_decomposition(ModelParams(J=0.0, Jz=0.3, B=0.2))
        assert_allclose(spec.eigenvalues, [0.7, -0.3, -0.3, -0.1], atol=1e-12)
        assert_allclose(spec.eigenvectors[:, 1], [0, 1, 0, 0], atol=0)
        assert_allclose(spec.eigenvectors[:, 2], [0, 0, 1, 0], atol=0)

    def test_eigenvalues_match_generic_solver(self, rng):
        for params in random_params(rng, 200):
            spec = spectral_decomposition(params)
            oracle = np.linalg.eigvalsh(build_hamiltonian(params))
            assert_allclose(np.sort(spec.eigenvalues), oracle, atol=1e-10)

    def test_invariants_random(self, rng):
        for params in random_params(rng, 1000):
            spec = spectral_decomposition(params)
            H = build_hamiltonian(params)
            U, V = spec.eigenvectors, spec.eigenvalues
            # orthonormality
            assert np.abs(U.conj().T @ U - np.eye(4)).max() < 1e-10
            # eigen-residuals
            for j in range(4):
                assert np.linalg.norm(H @ U[:, j] - V[j] * U[:, j]) < 1e-10
            # eigenvalue multiset
            chi, omega = params.chi(), params.omega()
            expected = sorted([params.Jz + chi, -params.Jz + omega,
                               -params.Jz - omega, params.Jz - chi])
            assert_allclose(np.sort(V), expected, atol=1e-10)

    def test_reconstruction(self, rng):
        for params in random_params(rng, 200):
            spec = spectral_decomposition(params)
            H_rec = (spec.eigenvectors
                     @ np.diag(spec.eigenvalues)
                     @ spec.eigenvectors.conj().T)
            assert np.abs(H_rec - build_hamiltonian(params)).max() < 1e-10

    def test_block_support(self, rng):
        for params in random_params(rng, 200):
            U = spectral_decomposition(params).eigenvectors
            # columns 0, 3 live on (dd, uu); columns 1, 2 on (du, ud)
            assert np.abs(U[[1, 2], :][:, [0, 3]]).max() < 1e-12
            assert np.abs(U[[0, 3], :][:, [1, 2]]).max() < 1e-12

    def test_phase_convention(self, rng):
        # a component of (tied-)largest magnitude is exactly real and positive
        for params in random_params(rng, 100):
            U = spectral_decomposition(params).eigenvectors
            for j in range(4):
                mags = np.abs(U[:, j])
                top = [k for k in range(4) if mags[k] >= mags.max() - 1e-12]
                assert any(U[k, j].imag == 0.0 and U[k, j].real > 0.0 for k in top)

    def test_deterministic(self, rng):
        for params in random_params(rng, 20):
            a = spectral_decomposition(params)
            b = spectral_decomposition(params)
            assert np.array_equal(a.eigenvalues, b.eigenvalues)
            assert np.array_equal(a.eigenvectors, b.eigenvectors)

    def test_near_degenerate_outer_block(self):
        # Gz -> 0 at finite B: the naive eigenvector formula would divide by ~0.
        spec = spectral_decomposition(ModelParams(Jz=0.2, B=0.5, Gz=1e-14))
        assert_allclose(np.abs(spec.eigenvectors[:, 0]), [1, 0, 0, 0], atol=1e-12)
        assert_allclose(np.abs(spec.eigenvectors[:, 3]), [0, 0, 0, 1], atol=1e-12)
