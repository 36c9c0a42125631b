"""Structured errors: every failure carries a kind and the operation name.

Run with: python3 demos/07_errors.py
"""

import numpy as np

from quditsim import QuantumError, default_rng, qmutualinfo, rand_rho, transpose

print("Asking for the mutual information with the 5th subsystem of a")
print("four-qubit state fails: there is no subsystem index 4.")
rho = rand_rho(16, default_rng(0))
try:
    qmutualinfo(rho, [0], [4], [2, 2, 2, 2])
except QuantumError as err:
    print("caught:", err)
    print("error kind:", err.kind.name)
    print("raised by:", err.op)

print()
print("Transposing an empty matrix is rejected up front:")
try:
    transpose(np.zeros((0, 0)))
except QuantumError as err:
    print("caught:", err)
    print("error kind:", err.kind.name)
