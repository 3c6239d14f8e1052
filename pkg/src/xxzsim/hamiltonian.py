"""Two-qubit XXZ Hamiltonian with DM and KSEA couplings, and its eigensystem.

The model couples two spin-1/2 particles through an in-plane exchange J, an
axial exchange Jz, a uniform magnetic field B along z, and the antisymmetric
(Dzyaloshinsky-Moriya, Dz) and symmetric (KSEA, Gz) spin-orbit terms.  On the
product basis ``(|dd>, |du>, |ud>, |uu>)`` the matrix splits into two 2x2
blocks: the field/KSEA couple ``|dd>`` to ``|uu>``, the exchange/DM couple
``|du>`` to ``|ud>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

BASIS_LABELS = ("dd", "du", "ud", "uu")

# Off-diagonal block magnitude below which the block counts as diagonal and
# the eigenvector formulas would be 0/0; the basis vectors are exact there.
BLOCK_DIAGONAL_EPS = 1e-12


@dataclass(frozen=True)
class ModelParams:
    """Couplings of the two-spin model, all dimensionless (hbar = 1).

    B must be non-negative; every field must be finite.
    """

    J: float = 0.0
    Jz: float = 0.0
    B: float = 0.0
    Dz: float = 0.0
    Gz: float = 0.0

    def __post_init__(self):
        for name in ("J", "Jz", "B", "Dz", "Gz"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if self.B < 0.0:
            raise ValueError(f"B must be >= 0, got {self.B}")

    def chi(self) -> float:
        """Gap scale 2*sqrt(B^2 + Gz^2) of the (dd, uu) block."""
        return 2.0 * math.hypot(self.B, self.Gz)

    def omega(self) -> float:
        """Gap scale 2*sqrt(J^2 + Dz^2) of the (du, ud) block."""
        return 2.0 * math.hypot(self.J, self.Dz)

    def replace(self, **changes) -> "ModelParams":
        fields = {k: getattr(self, k) for k in ("J", "Jz", "B", "Dz", "Gz")}
        fields.update(changes)
        return ModelParams(**fields)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues and orthonormal eigenvectors of the model Hamiltonian.

    The order is fixed to ``(Jz+chi, -Jz+omega, -Jz-omega, Jz-chi)`` no matter
    how the magnitudes compare, so index j always pairs the same block branch.
    Column j of ``eigenvectors`` belongs to ``eigenvalues[j]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        self.eigenvalues.flags.writeable = False
        self.eigenvectors.flags.writeable = False


def build_hamiltonian(params: ModelParams) -> np.ndarray:
    """4x4 Hermitian matrix of the model on the (dd, du, ud, uu) basis."""
    J, Jz, B, Dz, Gz = params.J, params.Jz, params.B, params.Dz, params.Gz
    H = np.zeros((4, 4), dtype=complex)
    H[0, 0] = Jz + 2.0 * B
    H[1, 1] = -Jz
    H[2, 2] = -Jz
    H[3, 3] = Jz - 2.0 * B
    H[0, 3] = -2j * Gz
    H[3, 0] = 2j * Gz
    H[1, 2] = 2.0 * J + 2j * Dz
    H[2, 1] = 2.0 * J - 2j * Dz
    return H


def _fix_phase(v: np.ndarray) -> np.ndarray:
    """Rotate a global phase so the largest-magnitude component is real > 0."""
    k = int(np.argmax(np.abs(v)))
    mag = abs(v[k])
    if mag > 0.0:
        v = v * (v[k].conjugate() / mag)
        v[k] = v[k].real
    return v


def _block_eigvecs(a: float, d: float, b: complex) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvectors of the Hermitian block [[a, b], [b*, d]], plus branch first.

    The representation dividing by the larger-magnitude component is used, so
    no branch suffers cancellation; a numerically diagonal block returns the
    standard basis.
    """
    delta = 0.5 * (a - d)
    if abs(b) < BLOCK_DIAGONAL_EPS:
        e0 = np.array([1.0, 0.0], dtype=complex)
        e1 = np.array([0.0, 1.0], dtype=complex)
        return (e0, e1) if delta >= 0.0 else (e1, e0)
    r = math.hypot(delta, abs(b))
    if delta >= 0.0:
        vp = np.array([delta + r, b.conjugate()], dtype=complex)
    else:
        vp = np.array([b, r - delta], dtype=complex)
    vp /= np.linalg.norm(vp)
    vm = np.array([-vp[1].conjugate(), vp[0].conjugate()])
    return _fix_phase(vp), _fix_phase(vm)


def spectral_decomposition(params: ModelParams) -> Spectrum:
    """Diagonalize the Hamiltonian block by block.

    Both 2x2 blocks are solved with the stable closed form, so the degenerate
    limits (chi -> 0, omega -> 0, or Gz -> 0 at finite B) are exact instead of
    0/0.
    """
    chi, omega = params.chi(), params.omega()
    eigenvalues = np.array([
        params.Jz + chi,
        -params.Jz + omega,
        -params.Jz - omega,
        params.Jz - chi,
    ])
    H = build_hamiltonian(params)
    outer_p, outer_m = _block_eigvecs(H[0, 0].real, H[3, 3].real, H[0, 3])
    inner_p, inner_m = _block_eigvecs(H[1, 1].real, H[2, 2].real, H[1, 2])
    eigenvectors = np.zeros((4, 4), dtype=complex)
    eigenvectors[[0, 3], 0] = outer_p
    eigenvectors[[0, 3], 3] = outer_m
    eigenvectors[[1, 2], 1] = inner_p
    eigenvectors[[1, 2], 2] = inner_m
    return Spectrum(eigenvalues=eigenvalues, eigenvectors=eigenvectors)
