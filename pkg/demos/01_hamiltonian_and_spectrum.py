"""Build the two-qubit Hamiltonian and inspect its block spectrum.

The matrix splits into two 2x2 blocks: the field/KSEA couple |dd> to |uu>
with gap scale chi, the exchange/DM couple |du> to |ud> with gap scale omega.
"""

import numpy as np

from xxzsim import ModelParams, build_hamiltonian, spectral_decomposition

np.set_printoptions(precision=4, suppress=True)

params = ModelParams(J=0.5, Jz=0.3, B=0.1, Dz=0.1, Gz=0.5)
H = build_hamiltonian(params)

print("couplings:", params)
print("chi  =", params.chi(), " (dd/uu block gap scale)")
print("omega=", params.omega(), " (du/ud block gap scale)")
print("\nHamiltonian on (dd, du, ud, uu):")
print(H)

spectrum = spectral_decomposition(params)
print("\neigenvalues (Jz+chi, -Jz+omega, -Jz-omega, Jz-chi):")
print(spectrum.eigenvalues)
print("\neigenvectors (columns):")
print(spectrum.eigenvectors)

residual = max(np.linalg.norm(H @ spectrum.eigenvectors[:, j]
                              - spectrum.eigenvalues[j] * spectrum.eigenvectors[:, j])
               for j in range(4))
print("\nmax eigen-residual:", residual)

recon = spectrum.eigenvectors @ np.diag(spectrum.eigenvalues) @ spectrum.eigenvectors.conj().T
print("reconstruction error:", np.abs(recon - H).max())

# the stable block solver handles limits where the textbook formulas are 0/0
degenerate = spectral_decomposition(ModelParams(Jz=0.2, B=0.5, Gz=0.0))
print("\nGz=0 limit eigenvectors (exact basis states):")
print(degenerate.eigenvectors.real)
