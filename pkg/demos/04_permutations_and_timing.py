"""Subsystem permutation on a nine-qubit codeword, with the stopwatch.

Run with: python3 demos/04_permutations_and_timing.py
"""

from quditsim import (
    Timer,
    default_rng,
    format_sequence,
    invperm,
    norm,
    rand_perm,
    shor_codeword,
    syspermute,
)

print("The 512-dimensional logical-zero codeword of the nine-qubit code")
print("has 8 equal amplitudes; shuffling its qubits and shuffling back")
print("must restore it exactly.")

c0 = shor_codeword(0)
rng = default_rng(0)

t = Timer()
perm = rand_perm(9, rng)
permuted = syspermute(c0, perm, [2] * 9)
t.toc()
print()
print("permutation:", format_sequence(perm))
print(f"permuting took {t.elapsed_seconds():.6f} s")

t.tic()
inv = invperm(perm)
restored = syspermute(permuted, inv, [2] * 9)
t.toc()
print("inverse permutation:", format_sequence(inv))
print(f"restoring took {t.elapsed_seconds():.6f} s")

print()
print("norm difference between original and restored codeword:", norm(restored - c0))
