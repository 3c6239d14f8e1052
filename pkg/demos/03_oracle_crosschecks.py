"""Four independent routes to the evolved state agree to high precision.

The production path damps eigenbasis coherences analytically; the explicit
X-entry formulas, a fixed-step RK4 integration of the master equation, and a
truncated Kraus sum are implemented separately and should reproduce it.
"""

import math

import numpy as np

from xxzsim import (EwlCase, InitialStateSpec, ModelParams, build_hamiltonian,
                    default_kraus_terms, evolve_closed_form, evolve_ode_oracle,
                    evolve_spectral, ewl_initial_state, kraus_evolve_oracle,
                    spectral_decomposition)

params = ModelParams(J=0.5, Jz=0.3, B=0.1, Dz=0.1, Gz=0.5)
state = InitialStateSpec(EwlCase.PARALLEL, p=0.7, theta=math.pi / 4)
gamma, t = 0.05, 5.0

spectrum = spectral_decomposition(params)
H = build_hamiltonian(params)
rho0 = ewl_initial_state(state)

reference = evolve_spectral(rho0, spectrum, gamma, t)
closed = evolve_closed_form(state, params, gamma, t)
ode = evolve_ode_oracle(rho0, H, gamma, t, dt=1e-3)
kraus = kraus_evolve_oracle(rho0, spectrum, gamma, t)

print(f"gamma={gamma}, t={t}, auto Kraus truncation L={default_kraus_terms(spectrum, gamma, t)}")
print("max |spectral - closed form| :", np.abs(reference - closed).max())
print("max |spectral - RK4 oracle|  :", np.abs(reference - ode).max())
print("max |spectral - Kraus sum|   :", np.abs(reference - kraus).max())

print("\nKraus truncation error versus number of retained terms:")
for L in (1, 2, 4, 8, 16, 32):
    dist = np.abs(kraus_evolve_oracle(rho0, spectrum, gamma, t, L=L) - reference).max()
    print(f"  L={L:<3} -> {dist:.3e}")

print("\nRK4 step-halving (global error should shrink ~16x per halving):")
for dt in (0.04, 0.02, 0.01):
    err = np.abs(evolve_ode_oracle(rho0, H, gamma, 2.0, dt=dt)
                 - evolve_spectral(rho0, spectrum, gamma, 2.0)).max()
    print(f"  dt={dt:<6} -> {err:.3e}")
