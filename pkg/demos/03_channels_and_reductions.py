"""Quantum channels: Kraus action, superoperator/Choi forms, partial
trace/transpose, and the entropy of the reduced state.

Run with: python3 demos/03_channels_and_reductions.py
"""

import numpy as np

from quditsim import (
    apply_channel,
    bell00,
    choi2kraus,
    entropy,
    format_matrix,
    format_sequence,
    hevals,
    kraus2choi,
    kraus2super,
    ptrace,
    ptranspose,
    qmutualinfo,
    st,
)

rho = bell00() @ bell00().conj().T
print("rho, the projector onto the Bell state:")
print(format_matrix(rho))

print()
print("Partially transposing qubit 0 exposes the entanglement: one")
print("negative eigenvalue appears.")
print(format_sequence(hevals(ptranspose(rho, [0], [2, 2])), ", "))

print()
print("A dephasing channel from two Kraus operators |0><0| and |1><1|:")
Ks = [st.z0 @ st.z0.conj().T, st.z1 @ st.z1.conj().T]
for i, K in enumerate(Ks):
    print(f"K{i}:")
    print(format_matrix(K))

print()
print("Its superoperator matrix (column-stacking convention):")
print(format_matrix(kraus2super(Ks)))
print()
print("Its (unnormalized) Choi matrix, trace = space dimension:")
print(format_matrix(kraus2choi(Ks)))
print()
print("Recovered Kraus operators from the Choi matrix:")
for K in choi2kraus(kraus2choi(Ks)):
    print(format_matrix(K))
    print()

print("Apply the channel to qubit 0 of rho; the off-diagonal")
print("coherences vanish:")
rho_out = apply_channel(rho, Ks, [0], [2, 2])
print(format_matrix(rho_out))

print()
print("Trace out qubit 1; the remaining qubit is maximally mixed:")
rho_a = ptrace(rho_out, [1], [2, 2])
print(format_matrix(rho_a))
print("its von Neumann entropy (bits):", entropy(rho_a))

print()
print("Mutual information across the fresh Bell pair:", qmutualinfo(rho, [0], [1], [2, 2]))
print("Trace is preserved by the channel:", np.isclose(np.trace(rho_out).real, 1.0))
