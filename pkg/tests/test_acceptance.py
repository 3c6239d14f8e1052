"""Acceptance criteria A1-A7: quantitative anchors, oracle agreement, properties.

Each test prints one PASS line with its runtime (visible with pytest -s);
tolerances are fixed here and nowhere else.
"""

import math
import time

import numpy as np
import pytest

from xxzsim import (EwlCase, InitialStateSpec, ModelParams, SweepConfig,
                    build_hamiltonian, correlated_coherence, discord_bruteforce,
                    evolve_closed_form, evolve_ode_oracle, evolve_spectral,
                    ewl_initial_state, kraus_evolve_oracle, l1_coherence,
                    partial_trace, run_sweep, spectral_decomposition, steady_state,
                    xstate_discord)

from conftest import BASELINE, random_params, random_state_spec, random_x_state

THETA = math.pi / 4


def _report(name, budget, started, detail=""):
    elapsed = time.time() - started
    assert elapsed < budget, f"{name} exceeded its {budget}s budget ({elapsed:.1f}s)"
    print(f"{name} PASS ({elapsed:.2f}s) {detail}")


def test_a1_initial_values():
    started = time.time()
    for case in (EwlCase.PARALLEL, EwlCase.ANTIPARALLEL):
        rho0 = ewl_initial_state(InitialStateSpec(case, p=0.7, theta=THETA))
        ccc = correlated_coherence(rho0)
        qd = xstate_discord(rho0).discord
        assert abs(ccc - 0.495) < 1e-3
        assert abs(qd - 0.262) < 2e-3
    _report("A1", 1.0, started, "C_cc(0)=0.495, QD(0)=0.262 for both cases")


def test_a2_steady_states_baseline():
    started = time.time()
    gamma = 0.05
    spectrum = spectral_decomposition(BASELINE)
    expected = {EwlCase.PARALLEL: (0.095, 1e-3, 0.007, 2e-3),
                EwlCase.ANTIPARALLEL: (0.485, 1e-3, 0.212, 2e-3)}
    for case, (ccc_ref, ccc_tol, qd_ref, qd_tol) in expected.items():
        rho0 = ewl_initial_state(InitialStateSpec(case, p=0.7, theta=THETA))
        fixed = steady_state(rho0, spectrum)
        late = evolve_spectral(rho0, spectrum, gamma, 1e4 / gamma)
        assert np.abs(fixed - late).max() < 1e-4
        assert abs(correlated_coherence(fixed) - ccc_ref) < ccc_tol
        assert abs(xstate_discord(fixed).discord - qd_ref) < qd_tol
        assert abs(correlated_coherence(late) - ccc_ref) < ccc_tol
    _report("A2", 5.0, started, "case1: 0.095/0.007, case2: 0.485/0.212, both routes")


def test_a3_field_ksea_cancellation():
    started = time.time()
    state = InitialStateSpec(EwlCase.PARALLEL, p=0.7, theta=THETA)
    results = []
    for bg in (0.1, 0.3, 0.8):
        spectrum = spectral_decomposition(BASELINE.replace(B=bg, Gz=bg))
        fixed = steady_state(ewl_initial_state(state), spectrum)
        results.append((correlated_coherence(fixed), xstate_discord(fixed).discord))
    for ccc, qd in results:
        assert abs(ccc - 0.2474) < 5e-4
        assert abs(qd - 0.0543) < 5e-4
    for (c1, q1), (c2, q2) in zip(results, results[1:]):
        assert abs(c1 - c2) < 1e-6
        assert abs(q1 - q2) < 1e-6
    _report("A3", 5.0, started, "steady 0.2474/0.0543, constant across B=Gz")


def test_a4_oracle_triangle():
    started = time.time()
    rng = np.random.default_rng(41)
    worst_cf = worst_ode = worst_kraus = 0.0
    checked = 0
    while checked < 200:
        params = random_params(rng)
        state = random_state_spec(rng)
        gap = params.chi() if state.case == EwlCase.PARALLEL else params.omega()
        if gap < 1e-6:
            continue
        checked += 1
        gamma = float(rng.uniform(0, 0.2))
        t = float(rng.uniform(0, 10))
        spectrum = spectral_decomposition(params)
        H = build_hamiltonian(params)
        rho0 = ewl_initial_state(state)
        reference = evolve_spectral(rho0, spectrum, gamma, t)
        worst_cf = max(worst_cf, np.abs(
            reference - evolve_closed_form(state, params, gamma, t)).max())
        worst_ode = max(worst_ode, np.abs(
            reference - evolve_ode_oracle(rho0, H, gamma, t, dt=1e-3)).max())
        worst_kraus = max(worst_kraus, np.abs(
            reference - kraus_evolve_oracle(rho0, spectrum, gamma, t)).max())
    assert worst_cf < 1e-10
    assert worst_ode < 1e-7
    assert worst_kraus < 1e-9
    _report("A4", 120.0, started,
            f"200 draws: closed {worst_cf:.1e}, ode {worst_ode:.1e}, kraus {worst_kraus:.1e}")


def test_a5_discord_oracle():
    started = time.time()
    rng = np.random.default_rng(42)
    deviations = []
    outliers = []
    for _ in range(1000):
        rho = random_x_state(rng)
        closed = xstate_discord(rho).discord
        brute = discord_bruteforce(rho)
        dev = closed - brute
        assert dev > -1e-9
        assert dev < 3e-3
        deviations.append(abs(dev))
        if abs(dev) > 1e-3:
            outliers.append((dev, rho))
    median = float(np.median(deviations))
    assert median < 1e-6
    for dev, rho in outliers:  # logged, not failed (known closed-form gap region)
        print(f"A5 note: closed-form exceeds brute force by {dev:.2e} for state "
              f"diag={np.real(np.diagonal(rho)).round(6).tolist()}, "
              f"r14={rho[0, 3]:.6f}, r23={rho[1, 2]:.6f}")
    _report("A5", 300.0, started,
            f"1000 X states: median dev {median:.1e}, max {max(deviations):.1e}, "
            f"{len(outliers)} above 1e-3")


def test_a6_property_suite():
    started = time.time()
    rng = np.random.default_rng(43)
    x_off = ((0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (2, 3), (3, 1), (3, 2))
    for _ in range(1000):
        params = random_params(rng)
        state = random_state_spec(rng)
        gamma = float(rng.uniform(0, 0.2))
        t = float(rng.uniform(0, 10))
        rho0 = ewl_initial_state(state)
        rho_t = evolve_spectral(rho0, spectral_decomposition(params), gamma, t)
        # trace / Hermiticity / positivity
        assert abs(np.trace(rho_t) - 1.0) < 1e-10
        assert np.abs(rho_t - rho_t.conj().T).max() < 1e-10
        assert np.linalg.eigvalsh(rho_t).min() > -1e-9
        # X pattern survives
        for i, j in x_off:
            assert abs(rho_t[i, j]) < 1e-12
        # local coherence of X states vanishes identically
        assert l1_coherence(partial_trace(rho_t, "A")) == 0.0
        assert l1_coherence(partial_trace(rho_t, "B")) == 0.0
        # axial exchange is invisible
        jz0 = evolve_spectral(rho0, spectral_decomposition(params.replace(Jz=0.0)),
                              gamma, t)
        jz2 = evolve_spectral(rho0, spectral_decomposition(params.replace(Jz=2.0)),
                              gamma, t)
        assert np.abs(jz0 - jz2).max() < 1e-9
    # no decoherence preserves purity
    for _ in range(200):
        params = random_params(rng)
        state = random_state_spec(rng)
        rho0 = ewl_initial_state(state)
        rho_t = evolve_spectral(rho0, spectral_decomposition(params), 0.0,
                                float(rng.uniform(0, 10)))
        assert abs(np.trace(rho_t @ rho_t).real - np.trace(rho0 @ rho0).real) < 1e-10
    # zero purity keeps every measure at zero
    for _ in range(100):
        params = random_params(rng)
        rho_t = evolve_spectral(np.eye(4, dtype=complex) / 4,
                                spectral_decomposition(params),
                                float(rng.uniform(0, 0.2)), float(rng.uniform(0, 10)))
        assert l1_coherence(rho_t) < 1e-9
        assert correlated_coherence(rho_t) < 1e-9
        assert xstate_discord(rho_t).discord < 1e-9
    _report("A6", 60.0, started, "1000-draw preservation/invariance suite")


def _ccc_trace(gamma, case, n_points, t_max=30.0):
    config = SweepConfig(params=BASELINE,
                         state=InitialStateSpec(case, 0.7, THETA),
                         gamma=gamma, t_max=t_max, n_points=n_points)
    return np.array([rec.C_cc for rec in run_sweep(config)])


def test_a7_figure_shapes():
    started = time.time()
    # gamma = 0: undamped oscillation.  The grid is dense enough (dt = 5e-4)
    # that the sampled maximum of each half-window sits within ~2e-7 of the
    # true peak, so the two window maxima must agree to 1e-6.
    for case in (EwlCase.PARALLEL, EwlCase.ANTIPARALLEL):
        ccc = _ccc_trace(0.0, case, n_points=60001)
        half = len(ccc) // 2
        assert abs(ccc[:half].max() - ccc[half:].max()) < 1e-6
    # gamma = 0.1: the oscillation envelope collapses by t = 30
    times = np.linspace(0.0, 30.0, 600)
    ccc = _ccc_trace(0.1, EwlCase.PARALLEL, n_points=600)
    early = ccc[times <= 2.0]
    late = ccc[times >= 28.0]
    early_swing = early.max() - early.min()
    late_swing = late.max() - late.min()
    assert late_swing < 0.2 * early_swing
    _report("A7", 120.0, started,
            f"undamped maxima match at gamma=0; late/early swing "
            f"{late_swing:.2e}/{early_swing:.2e}")
