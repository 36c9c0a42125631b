"""Seedable randomness: Haar unitaries, random states, permutations.

Run with: python3 demos/06_randomness.py
"""

import numpy as np

from quditsim import default_rng, format_matrix, rand_ket, rand_perm, rand_rho, rand_unitary

rng = default_rng(2024)

U = rand_unitary(3, rng)
print("A Haar-random 3x3 unitary (Ginibre draw, QR, phase fix):")
print(format_matrix(U))
print("max |U^dag U - I| =", np.abs(U.conj().T @ U - np.eye(3)).max())

print()
psi = rand_ket(4, rng)
print("A Haar-random ket on two qubits, norm =", np.linalg.norm(psi))

print()
rho = rand_rho(4, rng)
print("A random density matrix, trace =", np.trace(rho).real)
print("smallest eigenvalue:", np.linalg.eigvalsh(rho).min())

print()
print("A random permutation of 9 items:", rand_perm(9, rng))

print()
print("Equal seeds reproduce draws exactly:")
a = rand_unitary(2, default_rng(5))
b = rand_unitary(2, default_rng(5))
print("identical:", np.array_equal(a, b))
