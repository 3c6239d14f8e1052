import numpy as np
import pytest

from xxzsim import EwlCase, InitialStateSpec, ModelParams


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_params(rng, n=1):
    """Random coupling draws: uniform in [-2, 2], field in [0, 2]."""
    draws = [ModelParams(J=rng.uniform(-2, 2), Jz=rng.uniform(-2, 2),
                         B=rng.uniform(0, 2), Dz=rng.uniform(-2, 2),
                         Gz=rng.uniform(-2, 2)) for _ in range(n)]
    return draws[0] if n == 1 else draws


def random_state_spec(rng):
    return InitialStateSpec(case=EwlCase(int(rng.integers(1, 3))),
                            p=float(rng.uniform(0, 1)),
                            theta=float(rng.uniform(0, np.pi * 0.9999)))


def random_x_state(rng):
    """Random valid X-shaped density matrix (PSD by block construction)."""
    diag = rng.dirichlet(np.ones(4))
    r11, r22, r33, r44 = diag
    s14 = np.sqrt(r11 * r44) * rng.uniform(0, 1)
    s23 = np.sqrt(r22 * r33) * rng.uniform(0, 1)
    r14 = s14 * np.exp(2j * np.pi * rng.uniform())
    r23 = s23 * np.exp(2j * np.pi * rng.uniform())
    rho = np.diag(diag).astype(complex)
    rho[0, 3], rho[3, 0] = r14, np.conj(r14)
    rho[1, 2], rho[2, 1] = r23, np.conj(r23)
    return rho


BASELINE = ModelParams(J=0.5, Jz=0.3, B=0.1, Dz=0.1, Gz=0.5)
