"""States and gates: the registries, basis kets, and controlled gates.

Run with: python3 demos/01_states_and_gates.py
"""

import numpy as np

from quditsim import Fd, Xd, Zd, ctrl_gate, default_rng, format_matrix, gt, mket, rand_unitary, st

print("-" * 60)
print("Fixed states live in the registry `st`")
print("-" * 60)
print("st.z0 (the |0> state):")
print(format_matrix(st.z0))
print()
print("st.b00 (the Bell state (|00>+|11>)/sqrt(2)):")
print(format_matrix(st.b00))

print()
print("-" * 60)
print("Fixed gates live in the registry `gt`")
print("-" * 60)
print("X|0> flips the qubit:")
print(format_matrix(gt.X @ st.z0))
print()
print("CNOT with the control on the first qubit maps |10> to |11>:")
print(format_matrix(gt.CNOT @ mket([1, 0])))

print()
print("-" * 60)
print("Multipartite basis kets via mket")
print("-" * 60)
print("mket([1, 2], [2, 3]) is basis vector 5 of a qubit-qutrit pair:")
print(format_matrix(mket([1, 2], [2, 3])))

print()
print("-" * 60)
print("Qudit generalizations: shift, clock, Fourier")
print("-" * 60)
print("Xd(3) cycles the qutrit basis:")
print(format_matrix(Xd(3)))
print()
print("Zd(3) multiplies by powers of the cube root of unity:")
print(format_matrix(Zd(3)))
print()
print("Fd(2) is just the Hadamard:")
print(format_matrix(Fd(2)))

print()
print("-" * 60)
print("Controlled gates from any unitary")
print("-" * 60)
U = rand_unitary(2, default_rng(1))
print("a random 2x2 unitary U:")
print(format_matrix(U))
print()
print("ctrl_gate(U, ctrl=[0], target=[1], n=2) acts as diag(I, U):")
print(format_matrix(ctrl_gate(U, [0], [1], 2)))
print()
CU = ctrl_gate(U, [0], [1], 2)
print("unitarity check, max |CU^dag CU - I| =", np.abs(CU.conj().T @ CU - np.eye(4)).max())
