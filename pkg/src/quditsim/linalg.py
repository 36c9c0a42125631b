"""Dense linear-algebra helpers with eager input validation.

All functions return the result by value and never modify their inputs.
The eigensolver is Hermitian-only and reports eigenvalues in ascending
order; that covers every use in this library (partial-transpose spectra,
entropies, Choi decompositions).
"""

from __future__ import annotations

import numpy as np

from ._checks import as_matrix, check_nonzero, check_square
from .constants import EPS
from .exceptions import ErrorKind, QuantumError


def transpose(A) -> np.ndarray:
    """Matrix transpose."""
    M = as_matrix(A, "transpose")
    check_nonzero(M, "transpose")
    return M.T.copy()


def adjoint(A) -> np.ndarray:
    """Conjugate transpose."""
    M = as_matrix(A, "adjoint")
    check_nonzero(M, "adjoint")
    return M.conj().T.copy()


def trace(A) -> complex:
    """Sum of diagonal entries of a square matrix."""
    M = as_matrix(A, "trace")
    check_nonzero(M, "trace")
    check_square(M, "trace")
    return complex(np.trace(M))


def norm(A) -> float:
    """Frobenius norm; coincides with the Euclidean norm on kets."""
    M = as_matrix(A, "norm")
    check_nonzero(M, "norm")
    return float(np.linalg.norm(M))


def kron(A, B) -> np.ndarray:
    """Kronecker (tensor) product."""
    MA = as_matrix(A, "kron")
    MB = as_matrix(B, "kron")
    check_nonzero(MA, "kron")
    check_nonzero(MB, "kron")
    return np.kron(MA, MB)


def kron_pow(A, n: int) -> np.ndarray:
    """n-fold Kronecker power A (x) A (x) ... (n >= 1 factors)."""
    M = as_matrix(A, "kron_pow")
    check_nonzero(M, "kron_pow")
    n = int(n)
    if n < 1:
        raise QuantumError(ErrorKind.OUT_OF_RANGE, "kron_pow", f"n={n}")
    out = M.copy()
    for _ in range(n - 1):
        out = np.kron(out, M)
    return out


def _hermitian_input(A, op: str) -> np.ndarray:
    M = as_matrix(A, op)
    check_nonzero(M, op)
    check_square(M, op)
    if np.abs(M - M.conj().T).max() > EPS:
        raise QuantumError(ErrorKind.DIMS_INVALID, op, "matrix is not Hermitian")
    # symmetrize to stabilize roundoff before the decomposition
    return (M + M.conj().T) / 2


def hevals(H) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, real and ascending."""
    return np.linalg.eigvalsh(_hermitian_input(H, "hevals"))


def hevects(H) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and matching orthonormal eigenvector columns."""
    evals, V = np.linalg.eigh(_hermitian_input(H, "hevects"))
    return evals, V
