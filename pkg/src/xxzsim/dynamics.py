"""Extended Werner-like initial states and their intrinsic-decoherence evolution.

The non-unitary channel damps every coherence between energy eigenstates at a
rate proportional to the squared gap,

    rho(t) = sum_jk exp(-(g t / 2)(Vj - Vk)^2 - i (Vj - Vk) t) <uj|rho0|uk> |uj><uk|,

which solves  d(rho)/dt = -i [H, rho] - (g/2) [H, [H, rho]].  Three further
routes to the same state are provided for cross-checking: the explicit
closed-form entries of the evolved X matrix, a fixed-step RK4 integration of
the master equation, and a truncated Kraus-operator sum.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from .hamiltonian import ModelParams, Spectrum

logger = logging.getLogger(__name__)

# Eigenvalue gaps below eps_deg * (1 + max|V|) count as degenerate: their
# coherences never damp and survive into the steady state.
STEADY_DEGENERACY_EPS = 1e-9


class DegenerateLimitError(ValueError):
    """Closed-form entries are 0/0 in this limit; evolve_spectral handles it."""


class EwlCase(IntEnum):
    """Which Bell-like pair the extended Werner-like state superposes.

    PARALLEL mixes |dd> with |uu> (coherence lives in the chi block),
    ANTIPARALLEL mixes |du> with |ud> (the omega block).  The mixed case with
    both amplitudes nonzero is deliberately not representable: its evolution
    is ill-defined once the cross terms are dropped.
    """

    PARALLEL = 1
    ANTIPARALLEL = 2


@dataclass(frozen=True)
class InitialStateSpec:
    """EWL state selector: p |psi><psi| + (1-p)/4 * I with Bloch angle theta."""

    case: EwlCase
    p: float
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "case", EwlCase(self.case))
        if not (math.isfinite(self.p) and 0.0 <= self.p <= 1.0):
            raise ValueError(f"p must lie in [0, 1], got {self.p!r}")
        if not (math.isfinite(self.theta) and 0.0 <= self.theta < math.pi):
            raise ValueError(f"theta must lie in [0, pi), got {self.theta!r}")

    def replace(self, **changes) -> "InitialStateSpec":
        fields = {"case": self.case, "p": self.p, "theta": self.theta}
        fields.update(changes)
        return InitialStateSpec(**fields)


def _check_gamma_t(gamma: float, t: float):
    if not (math.isfinite(gamma) and gamma >= 0.0):
        raise ValueError(f"gamma must be finite and >= 0, got {gamma!r}")
    if not (math.isfinite(t) and t >= 0.0):
        raise ValueError(f"t must be finite and >= 0, got {t!r}")


def ewl_initial_state(spec: InitialStateSpec) -> np.ndarray:
    """Density matrix p |psi><psi| + (1-p)/4 * I of the chosen Bell-like pair."""
    c = math.cos(spec.theta / 2.0)
    s = math.sin(spec.theta / 2.0)
    if spec.case == EwlCase.PARALLEL:
        psi = np.array([c, 0.0, 0.0, s], dtype=complex)
    else:
        psi = np.array([0.0, c, s, 0.0], dtype=complex)
    return spec.p * np.outer(psi, psi.conj()) + (1.0 - spec.p) / 4.0 * np.eye(4, dtype=complex)


def evolve_spectral(rho0: np.ndarray, spectrum: Spectrum, gamma: float, t: float) -> np.ndarray:
    """Evolve rho0 by damping/rotating its eigenbasis coherences.

    Exact for any initial state and any parameter values, including the
    degenerate limits where the closed-form entries break down.
    """
    _check_gamma_t(gamma, t)
    V = spectrum.eigenvalues
    U = spectrum.eigenvectors
    gaps = np.subtract.outer(V, V)
    damp_rot = np.exp(-(gamma * t / 2.0) * gaps**2 - 1j * gaps * t)
    rho_eig = U.conj().T @ rho0 @ U
    return U @ (damp_rot * rho_eig) @ U.conj().T


def evolve_closed_form(spec: InitialStateSpec, params: ModelParams,
                       gamma: float, t: float) -> np.ndarray:
    """Evolved X matrix from the explicit entry formulas.

    Only the block carrying the initial coherence moves; the other block stays
    frozen at (1-p)/4 populations.  Requires a nonzero gap in the active
    block (chi > 0 for PARALLEL, omega > 0 for ANTIPARALLEL); otherwise a
    DegenerateLimitError points the caller at evolve_spectral.
    """
    _check_gamma_t(gamma, t)
    p = spec.p
    ct, st = math.cos(spec.theta), math.sin(spec.theta)
    rho = np.zeros((4, 4), dtype=complex)
    if spec.case == EwlCase.PARALLEL:
        chi = params.chi()
        if chi < 1e-12:
            raise DegenerateLimitError(
                "chi = 2*sqrt(B^2+Gz^2) vanishes; use evolve_spectral for this limit")
        B, Gz = params.B, params.Gz
        damp = math.exp(-2.0 * gamma * t * chi**2)
        c2, s2 = math.cos(2.0 * t * chi), math.sin(2.0 * t * chi)
        rho[0, 0] = (B**2 * (2.0 * p * ct + p + 1.0)
                     + p * Gz * damp * (2.0 * ct * Gz * c2 - chi * st * s2)
                     + (p + 1.0) * Gz**2) / chi**2
        rho[3, 3] = (B**2 * (-2.0 * p * ct + p + 1.0)
                     + p * Gz * damp * (chi * st * s2 - 2.0 * ct * Gz * c2)
                     + (p + 1.0) * Gz**2) / chi**2
        rho[1, 1] = rho[2, 2] = (1.0 - p) / 4.0
        # The undamped -2iB term is the piece that survives to the steady state.
        r14 = (p / (2.0 * chi**2)) * (
            damp * (chi * st * (chi * c2 - 2j * B * s2)
                    + 2.0 * ct * Gz * (2j * B * c2 + chi * s2))
            - 2j * B * 2.0 * ct * Gz)
        rho[0, 3] = r14
        rho[3, 0] = r14.conjugate()
    else:
        omega = params.omega()
        if omega < 1e-12:
            raise DegenerateLimitError(
                "omega = 2*sqrt(J^2+Dz^2) vanishes; use evolve_spectral for this limit")
        J, Dz = params.J, params.Dz
        damp = math.exp(-2.0 * gamma * t * omega**2)
        c2, s2 = math.cos(2.0 * t * omega), math.sin(2.0 * t * omega)
        wobble = 2.0 * p * damp * (2.0 * Dz * st * s2 + omega * ct * c2)
        rho[1, 1] = ((p + 1.0) * omega + wobble) / (4.0 * omega)
        rho[2, 2] = ((p + 1.0) * omega - wobble) / (4.0 * omega)
        rho[0, 0] = rho[3, 3] = (1.0 - p) / 4.0
        r23 = (p / omega**2) * (J + 1j * Dz) * (
            damp * (-2j * Dz * st * c2 + 1j * omega * ct * s2) + 2.0 * J * st)
        rho[1, 2] = r23
        rho[2, 1] = r23.conjugate()
    return rho


def _master_equation_rhs(rho: np.ndarray, H: np.ndarray, gamma: float) -> np.ndarray:
    comm = H @ rho - rho @ H
    double = H @ comm - comm @ H
    return -1j * comm - 0.5 * gamma * double


def evolve_ode_oracle(rho0: np.ndarray, H: np.ndarray, gamma: float, t: float,
                      dt: float = 1e-3) -> np.ndarray:
    """Fixed-step RK4 integration of the master equation, as an oracle.

    Deliberately ignorant of the eigensystem: it drives the double-commutator
    equation directly.  If t is not a multiple of dt the final step is
    shortened.  Trace drift beyond 1e-12 is renormalized and logged.
    """
    _check_gamma_t(gamma, t)
    if not (math.isfinite(dt) and dt > 0.0):
        raise ValueError(f"dt must be > 0, got {dt!r}")
    rho = np.array(rho0, dtype=complex)
    remaining = t
    while remaining > 0.0:
        h = min(dt, remaining)
        k1 = _master_equation_rhs(rho, H, gamma)
        k2 = _master_equation_rhs(rho + 0.5 * h * k1, H, gamma)
        k3 = _master_equation_rhs(rho + 0.5 * h * k2, H, gamma)
        k4 = _master_equation_rhs(rho + h * k3, H, gamma)
        rho = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        remaining -= h
    drift = abs(np.trace(rho).real - 1.0)
    if drift > 1e-12:
        logger.warning("RK4 trace drift %.3e exceeded 1e-12; renormalizing", drift)
        rho = rho / np.trace(rho).real
    return rho


def default_kraus_terms(spectrum: Spectrum, gamma: float, t: float) -> int:
    """Truncation order with a comfortable Poisson-tail margin."""
    vmax = float(np.max(np.abs(spectrum.eigenvalues)))
    return math.ceil(6.0 * gamma * t * vmax**2 + 20.0)


def kraus_evolve_oracle(rho0: np.ndarray, spectrum: Spectrum, gamma: float, t: float,
                        L: int | None = None) -> np.ndarray:
    """Truncated Kraus sum sum_{l<=L} M_l rho0 M_l^dagger in the eigenbasis.

    M_l = sqrt((g t)^l / l!) H^l exp(-iHt) exp(-(g t / 2) H^2) acts diagonally
    on the eigenvalues, so the sum reduces to an entrywise weight that is
    accumulated term by term (never forming (g t)^l / l! alone, which would
    overflow long before the weights become large).
    """
    _check_gamma_t(gamma, t)
    if L is None:
        L = default_kraus_terms(spectrum, gamma, t)
    if L < 0:
        raise ValueError(f"L must be >= 0, got {L!r}")
    V = spectrum.eigenvalues
    U = spectrum.eigenvectors
    x = gamma * t * np.multiply.outer(V, V)
    weight = np.ones((4, 4))
    term = np.ones((4, 4))
    for l in range(1, L + 1):
        term = term * x / l
        weight = weight + term
    gaps_phase = np.exp(-1j * np.subtract.outer(V, V) * t)
    envelope = np.exp(-(gamma * t / 2.0) * np.add.outer(V**2, V**2))
    rho_eig = U.conj().T @ rho0 @ U
    return U @ (weight * gaps_phase * envelope * rho_eig) @ U.conj().T


def steady_state(rho0: np.ndarray, spectrum: Spectrum) -> np.ndarray:
    """The t -> infinity limit for any nonzero decoherence rate.

    Keeps exactly the eigenbasis entries whose gap is degenerate (within
    eps_deg, so accidental crossings keep their undamped coherences) and
    drops everything else.  Independent of the rate itself.
    """
    V = spectrum.eigenvalues
    U = spectrum.eigenvectors
    eps = STEADY_DEGENERACY_EPS * (1.0 + float(np.max(np.abs(V))))
    keep = np.abs(np.subtract.outer(V, V)) <= eps
    rho_eig = U.conj().T @ rho0 @ U
    return U @ np.where(keep, rho_eig, 0.0) @ U.conj().T
