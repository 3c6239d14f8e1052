"""Coherence and quantum-correlation quantifiers for two-qubit states.

All entropies are base-2.  The discord comes in two routes that check each
other: the closed form for X-shaped states, and a brute-force minimization
over projective measurements on the second qubit that works for any state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# PSD tolerance: eigenvalues in [-PSD_TOL, 0) are clipped to 0, below is an error.
PSD_TOL = 1e-9
X_SHAPE_TOL = 1e-10

# Row/column pairs that must vanish for an X-shaped two-qubit state.
_X_OFF_PATTERN = ((0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (2, 3), (3, 1), (3, 2))


class NotAStateError(ValueError):
    """Input violates Hermiticity, unit trace, or positivity tolerances."""


class NotXStateError(ValueError):
    """Input has support outside the diagonal + antidiagonal pattern."""


def partial_trace(rho: np.ndarray, keep: str) -> np.ndarray:
    """Reduced 2x2 state of qubit 'A' (first) or 'B' (second)."""
    blocks = np.asarray(rho).reshape(2, 2, 2, 2)
    if keep == "A":
        return np.einsum("abcb->ac", blocks)
    if keep == "B":
        return np.einsum("abad->bd", blocks)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def l1_coherence(rho: np.ndarray) -> float:
    """Sum of the moduli of all off-diagonal entries."""
    moduli = np.abs(np.asarray(rho))
    np.fill_diagonal(moduli, 0.0)
    return float(moduli.sum())


def correlated_coherence(rho: np.ndarray) -> float:
    """Total coherence minus both single-qubit coherences.

    For X-shaped states the reduced states are diagonal, so this equals the
    total coherence.
    """
    return (l1_coherence(rho)
            - l1_coherence(partial_trace(rho, "A"))
            - l1_coherence(partial_trace(rho, "B")))


def _clip_probabilities(lams: np.ndarray) -> np.ndarray:
    lams = np.real(lams)
    if lams.min() < -PSD_TOL:
        raise NotAStateError(f"eigenvalue {lams.min():.3e} below -{PSD_TOL}")
    return np.clip(lams, 0.0, 1.0)


def _xlog2x(x: np.ndarray) -> np.ndarray:
    """x * log2(x) with the 0 log 0 := 0 convention."""
    x = np.asarray(x, dtype=float)
    safe = np.where(x > 0.0, x, 1.0)
    return np.where(x > 0.0, x * np.log2(safe), 0.0)


def von_neumann_entropy(rho: np.ndarray) -> float:
    """-tr(rho log2 rho) of a density matrix of any dimension."""
    lams = _clip_probabilities(np.linalg.eigvalsh(rho))
    return float(-_xlog2x(lams).sum())


def binary_entropy(x: float) -> float:
    """f(x) = -x log2 x - (1-x) log2 (1-x), with f(0) = f(1) = 0."""
    if not (-PSD_TOL <= x <= 1.0 + PSD_TOL):
        raise ValueError(f"binary_entropy defined on [0, 1], got {x!r}")
    x = min(max(float(x), 0.0), 1.0)
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


@dataclass(frozen=True)
class DiscordBreakdown:
    """Closed-form discord of an X state and the pieces it is built from.

    qd1/qd2 are the two candidate measurement branches, discord their
    minimum; populations are the four block eigenvalues of the state,
    big_lambda the dominant conditional eigenvalue entering qd1, and beta
    the down-probability of the measured qubit.
    """

    qd1: float
    qd2: float
    discord: float
    populations: np.ndarray
    big_lambda: float
    beta: float


def xstate_discord(rho: np.ndarray) -> DiscordBreakdown:
    """Closed-form quantum discord of an X-shaped two-qubit state.

    Uses the modulus form |r14| + |r23| throughout; validated against
    discord_bruteforce, which it may exceed by at most a few 1e-3 in the
    known worst-case region.
    """
    rho = np.asarray(rho)
    off = max(abs(rho[i, j]) for i, j in _X_OFF_PATTERN)
    if off > X_SHAPE_TOL:
        raise NotXStateError(f"off-pattern entry of magnitude {off:.3e}")
    if abs(np.trace(rho).real - 1.0) > 1e-10 or abs(np.trace(rho).imag) > 1e-10:
        raise NotAStateError("trace differs from 1 beyond 1e-10")
    if (abs(rho[0, 3] - rho[3, 0].conjugate()) > 1e-10
            or abs(rho[1, 2] - rho[2, 1].conjugate()) > 1e-10
            or np.abs(np.diagonal(rho).imag).max() > 1e-10):
        raise NotAStateError("not Hermitian within 1e-10")

    r11, r22, r33, r44 = np.diagonal(rho).real
    r14, r23 = rho[0, 3], rho[1, 2]

    inner_gap = math.hypot(r22 - r33, 2.0 * abs(r23))
    outer_gap = math.hypot(r11 - r44, 2.0 * abs(r14))
    populations = _clip_probabilities(np.array([
        0.5 * ((r22 + r33) - inner_gap),
        0.5 * ((r22 + r33) + inner_gap),
        0.5 * ((r11 + r44) - outer_gap),
        0.5 * ((r11 + r44) + outer_gap),
    ]))

    beta = r11 + r33
    big_lambda = 0.5 * (1.0 + math.hypot(1.0 - 2.0 * (r33 + r44),
                                         2.0 * (abs(r14) + abs(r23))))
    sum_lam_log = float(_xlog2x(populations).sum())
    diag_entropy = float(-_xlog2x(_clip_probabilities(np.array([r11, r22, r33, r44]))).sum())
    f_beta = binary_entropy(beta)
    d1 = binary_entropy(min(big_lambda, 1.0))
    d2 = diag_entropy - f_beta
    qd1 = f_beta + sum_lam_log + d1
    qd2 = f_beta + sum_lam_log + d2
    discord = min(qd1, qd2)
    if discord < -PSD_TOL:
        raise NotAStateError(f"discord {discord:.3e} below -{PSD_TOL}")
    return DiscordBreakdown(qd1=qd1, qd2=qd2, discord=max(discord, 0.0),
                            populations=populations, big_lambda=big_lambda, beta=beta)


@dataclass(frozen=True)
class MeasurementGrid:
    """Search resolution for the brute-force discord minimization."""

    n_theta: int = 64
    n_phi: int = 128
    angle_tol: float = 1e-6


def _entropy_contribution(M00, M11, M01):
    """p * S(M / p) for 2x2 blocks M, as h(l1) + h(l2) - h(p) with h = -x log2 x."""
    p = np.clip(np.real(M00 + M11), 0.0, 1.0)
    radius = np.sqrt(np.real(M00 - M11) ** 2 + 4.0 * np.abs(M01) ** 2)
    lam_hi = np.clip(0.5 * (p + radius), 0.0, 1.0)
    lam_lo = np.clip(0.5 * (p - radius), 0.0, 1.0)
    return -(_xlog2x(lam_hi) + _xlog2x(lam_lo)) + _xlog2x(p)


def _conditional_entropy(blocks, rho_a, thetas, phis):
    """Post-measurement entropy of qubit A for kets (cos t/2, e^{i phi} sin t/2) on B."""
    m0 = np.cos(thetas / 2.0)
    m1 = np.exp(1j * phis) * np.sin(thetas / 2.0)
    kets = np.stack([m0, m1], axis=-1)
    measured = np.einsum("...b,abcd,...d->...ac", kets.conj(), blocks, kets)
    rest = rho_a - measured
    return (_entropy_contribution(measured[..., 0, 0], measured[..., 1, 1], measured[..., 0, 1])
            + _entropy_contribution(rest[..., 0, 0], rest[..., 1, 1], rest[..., 0, 1]))


def _pattern_search(blocks, rho_a, theta0, phi0, step, tol):
    """Deterministic shrinking 3x3 pattern search on the measurement sphere."""
    offsets = np.array([(dt, dp) for dt in (-1.0, 0.0, 1.0) for dp in (-1.0, 0.0, 1.0)])
    theta, phi = theta0, phi0
    best = float(_conditional_entropy(blocks, rho_a, np.array(theta), np.array(phi)))
    while step > tol:
        cand_t = np.clip(theta + step * offsets[:, 0], 0.0, np.pi)
        cand_p = np.mod(phi + step * offsets[:, 1], 2.0 * np.pi)
        values = _conditional_entropy(blocks, rho_a, cand_t, cand_p)
        k = int(np.argmin(values))
        if values[k] < best - 1e-15:
            best = float(values[k])
            theta, phi = float(cand_t[k]), float(cand_p[k])
        else:
            step *= 0.5
    return best


def discord_bruteforce(rho: np.ndarray, grid: MeasurementGrid | None = None) -> float:
    """Discord by direct minimization over projective measurements on qubit B.

    Coarse grid scan followed by pattern-search refinement from the best grid
    point, the z axis, and the best equatorial direction, so the search never
    lands above either closed-form measurement branch.
    """
    if grid is None:
        grid = MeasurementGrid()
    rho = np.asarray(rho, dtype=complex)
    blocks = rho.reshape(2, 2, 2, 2)
    rho_a = partial_trace(rho, "A")
    rho_b = partial_trace(rho, "B")
    s_rho = von_neumann_entropy(rho)
    s_b = von_neumann_entropy(rho_b)

    thetas = np.linspace(0.0, np.pi, grid.n_theta)
    phis = np.linspace(0.0, 2.0 * np.pi, grid.n_phi, endpoint=False)
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    values = _conditional_entropy(blocks, rho_a, tt, pp)
    k = int(np.argmin(values))
    ti, pi_ = divmod(k, grid.n_phi)

    equator = _conditional_entropy(blocks, rho_a, np.full_like(phis, np.pi / 2.0), phis)
    ke = int(np.argmin(equator))

    starts = [
        (float(tt[ti, pi_]), float(pp[ti, pi_])),
        (0.0, 0.0),
        (np.pi / 2.0, float(phis[ke])),
    ]
    step0 = max(np.pi / grid.n_theta, 2.0 * np.pi / grid.n_phi)
    best = min(_pattern_search(blocks, rho_a, t0, p0, step0, grid.angle_tol)
               for t0, p0 in starts)
    return max(0.0, best + s_b - s_rho)
