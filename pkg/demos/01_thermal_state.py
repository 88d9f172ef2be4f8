"""
Gibbs state of the two-qubit XXZ model
======================================

Build the Hamiltonian with DM and KSEA couplings, read off its spectrum in
closed form, and compare the closed-form thermal state against
``exp(-H/T)/Z`` from a numeric diagonalisation.
"""

# %%
import numpy as np

from spinchannel import SpinParams, build_hamiltonian, hamiltonian_spectrum, thermal_state
from spinchannel.linalg import hermitian_eigensystem
from spinchannel.spin import gibbs_matrix, thermal_state_eigenvalues

np.set_printoptions(precision=4, suppress=True)
p = SpinParams(J=1, delta_z=1, D_z=1, K_z=5, B=1, T=1)
print(build_hamiltonian(p))

# %%
# Energies come in two pairs, delta_z +- Lambda and -delta_z +- upsilon.
energies, states = hamiltonian_spectrum(p)
print("closed form:", energies)
print("Jacobi     :", hermitian_eigensystem(build_hamiltonian(p))[0])

# %%
# The KSEA term dominates, so the state sits close to a superposition of
# |00> and |11>.
s = thermal_state(p)
print(s)
print("max deviation from numeric Gibbs state:", np.abs(s.to_matrix() - gibbs_matrix(p)).max())
print("spectrum:", np.sort(thermal_state_eigenvalues(s)))

# %%
# Raising the temperature washes the state out towards I/4.
for T in (0.1, 1, 10, 1e4):
    rho = thermal_state(SpinParams(J=1, delta_z=1, D_z=1, K_z=5, B=1, T=T)).to_matrix()
    print(f"T={T:g}: distance to I/4 = {np.abs(rho - np.eye(4) / 4).max():.3e}")
