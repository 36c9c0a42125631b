"""Projective measurement: build a Bell pair, rotate it, measure a qubit.

Run with: python3 demos/02_measurements.py
"""

from quditsim import apply, default_rng, format_matrix, format_sequence, gt, kron, measure, mket

print("Prepare |00>, entangle with CNOT (H x I):")
psi = apply(mket([0, 0]), gt.CNOT @ kron(gt.H, gt.Id(2)), [0, 1], [2, 2])
print(format_matrix(psi))

print()
print("Flip the second qubit (subsystem 1, indices start at 0):")
psi = apply(psi, gt.X, [1], [2, 2])
print(format_matrix(psi))

print()
print("Measure qubit 0 in the X basis; the basis is given by the")
print("columns of a matrix, here the Hadamard columns |+>, |->.")
rng = default_rng(7)
result, probs, states = measure(psi, gt.H, [0], [2, 2], rng)

print()
print("sampled outcome:", result)
print("outcome probabilities:", format_sequence(probs, ", "))
for i, state in enumerate(states):
    print(f"post-measurement state for outcome {i} (measured qubit removed):")
    print(format_matrix(state))

print()
print("Measurement never mutates its input; rerunning with the same")
print("seed reproduces the same outcome:")
again = measure(psi, gt.H, [0], [2, 2], default_rng(7))
print("same result:", again.result == result)
