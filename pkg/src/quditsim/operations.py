"""Subsystem-targeted operator application, channels, and index surgery.

Conventions, fixed once for the whole library:

* Vectorization is column-stacking: ``vec(A)`` concatenates the columns
  of A, so ``vec(A @ rho @ B) == (B.T kron A) @ vec(rho)``.
* The Choi matrix is unnormalized: ``trace(choi) == D`` for a
  trace-preserving channel on a D-dimensional space.
* :func:`ptrace` takes the subsystems to REMOVE, not the ones to keep.

All functions return the result by value and never modify their inputs.
"""

from __future__ import annotations

from math import prod
from typing import Sequence

import numpy as np

from ._checks import (
    as_matrix,
    as_state,
    check_dims,
    check_nonzero,
    check_square,
    check_subsys,
)
from .constants import EPS
from .exceptions import ErrorKind, QuantumError


def _op_tensor_apply(t: np.ndarray, Ut: np.ndarray, s: int, axes: Sequence[int]) -> np.ndarray:
    """Contract the s input axes of Ut (shape out_dims + in_dims) against
    ``axes`` of t, putting the output axes back in their place."""
    out = np.tensordot(Ut, t, axes=(list(range(s, 2 * s)), list(axes)))
    return np.moveaxis(out, list(range(s)), list(axes))


def _validated_targets(
    op: str, state, U, subsys: Sequence[int], dims: Sequence[int]
) -> tuple[np.ndarray, bool, np.ndarray, list[int], list[int], list[int]]:
    ds = check_dims(dims, op)
    D = prod(ds)
    M, is_ket = as_state(state, D, op)
    G = as_matrix(U, op)
    check_nonzero(G, op)
    check_square(G, op)
    ss = check_subsys(subsys, len(ds), op)
    dsub = [ds[k] for k in ss]
    if G.shape[0] != prod(dsub):
        raise QuantumError(
            ErrorKind.DIMS_MISMATCH_MATRIX,
            op,
            f"operator side {G.shape[0]} != product of targeted dimensions {prod(dsub)}",
        )
    return M, is_ket, G, ss, ds, dsub


def apply(state, U, subsys: Sequence[int], dims: Sequence[int]) -> np.ndarray:
    """Apply an operator to selected subsystems of a ket or density matrix.

    For a ket psi this computes (U on ``subsys``, identity elsewhere) psi;
    for a density matrix rho it conjugates, U_full rho U_full^dag. The
    order of ``subsys`` fixes the tensor-factor order U acts in.

    Args:
        state: column ket of length prod(dims) or square matrix of that side.
        U: square operator of side prod(dims[k] for k in subsys).
        subsys: distinct subsystem indices U acts on.
        dims: dimension of each subsystem.

    Returns:
        A ket for ket input, a square matrix for matrix input.
    """
    M, is_ket, G, ss, ds, dsub = _validated_targets("apply", state, U, subsys, dims)
    n = len(ds)
    s = len(ss)
    Ut = G.reshape(dsub + dsub)
    if is_ket:
        t = _op_tensor_apply(M.reshape(ds), Ut, s, ss)
        return t.reshape(-1, 1)
    t = M.reshape(ds + ds)
    t = _op_tensor_apply(t, Ut, s, ss)
    t = _op_tensor_apply(t, Ut.conj(), s, [n + k for k in ss])
    return t.reshape(M.shape)


def apply_ctrl(
    state, U, ctrl: Sequence[int], target: Sequence[int], dims: Sequence[int]
) -> np.ndarray:
    """Apply a generalized controlled-U without building the full operator.

    When every control subsystem (all of one dimension d) carries the
    value j, U^j acts on the target subsystems; any other control
    configuration is left alone. Works on kets and density matrices.
    """
    op = "apply_ctrl"
    ds = check_dims(dims, op)
    D = prod(ds)
    M, is_ket = as_state(state, D, op)
    G = as_matrix(U, op)
    check_nonzero(G, op)
    check_square(G, op)
    cc = check_subsys(ctrl, len(ds), op)
    tt = check_subsys(target, len(ds), op)
    if set(cc) & set(tt):
        raise QuantumError(ErrorKind.SUBSYS_MISMATCH_DIMS, op, "ctrl and target overlap")
    d = ds[cc[0]]
    if any(ds[c] != d for c in cc):
        raise QuantumError(
            ErrorKind.SUBSYS_MISMATCH_DIMS, op, "control subsystems must share one dimension"
        )
    dsub = [ds[k] for k in tt]
    tdim = prod(dsub)
    if G.shape[0] != tdim:
        raise QuantumError(
            ErrorKind.DIMS_MISMATCH_MATRIX,
            op,
            f"operator side {G.shape[0]} != product of target dimensions {tdim}",
        )

    powers = [np.eye(tdim, dtype=np.complex128)]
    for _ in range(d - 1):
        powers.append(powers[-1] @ G)
    n = len(ds)
    s = len(tt)

    def sector_apply(t: np.ndarray, offset: int, Uj: np.ndarray, j: int) -> None:
        # Fix the control axes (at +offset) to value j; the slice keeps the
        # remaining axes in order, so target positions shift down by the
        # number of removed axes before them.
        sl: list = [slice(None)] * t.ndim
        for c in cc:
            sl[offset + c] = j
        sub = t[tuple(sl)]
        shifted = [offset + k - sum(1 for c in cc if c < k) for k in tt]
        Ut = Uj.reshape(dsub + dsub)
        t[tuple(sl)] = _op_tensor_apply(sub, Ut, s, shifted)

    if is_ket:
        t = M.reshape(ds).copy()
        for j in range(1, d):
            sector_apply(t, 0, powers[j], j)
        return t.reshape(-1, 1)

    t = M.reshape(ds + ds).copy()
    for j in range(1, d):  # left factor: K rho
        sector_apply(t, 0, powers[j], j)
    for j in range(1, d):  # right factor: (K rho) K^dag
        sector_apply(t, n, powers[j].conj(), j)
    return t.reshape(M.shape)


def _check_kraus(Ks, op: str) -> list[np.ndarray]:
    if Ks is None or len(Ks) == 0:
        raise QuantumError(ErrorKind.ZERO_SIZE, op, "empty Kraus list")
    out = []
    for K in Ks:
        M = as_matrix(K, op)
        check_nonzero(M, op)
        check_square(M, op)
        out.append(M)
    if any(K.shape != out[0].shape for K in out):
        raise QuantumError(ErrorKind.DIMS_MISMATCH_MATRIX, op, "Kraus operators differ in shape")
    return out


def apply_channel(rho, Ks, subsys: Sequence[int], dims: Sequence[int]) -> np.ndarray:
    """Apply a Kraus-operator channel to selected subsystems of rho.

    Computes sum_i K_i_full rho K_i_full^dag with each K_i embedded on
    ``subsys``. Preserves the trace when the channel is trace preserving.
    """
    op = "apply_channel"
    ops = _check_kraus(Ks, op)
    ds = check_dims(dims, op)
    D = prod(ds)
    M = as_matrix(rho, op)
    check_nonzero(M, op)
    check_square(M, op)
    if M.shape[0] != D:
        raise QuantumError(
            ErrorKind.DIMS_MISMATCH_MATRIX, op, f"state side {M.shape[0]} != prod(dims) {D}"
        )
    ss = check_subsys(subsys, len(ds), op)
    dsub = [ds[k] for k in ss]
    if ops[0].shape[0] != prod(dsub):
        raise QuantumError(
            ErrorKind.DIMS_MISMATCH_MATRIX,
            op,
            f"Kraus side {ops[0].shape[0]} != product of targeted dimensions {prod(dsub)}",
        )
    n = len(ds)
    s = len(ss)
    t = M.reshape(ds + ds)
    out = np.zeros_like(t)
    for K in ops:
        Kt = K.reshape(dsub + dsub)
        term = _op_tensor_apply(t, Kt, s, ss)
        term = _op_tensor_apply(term, Kt.conj(), s, [n + k for k in ss])
        out += term
    return out.reshape(M.shape)


def vec(A) -> np.ndarray:
    """Column-stacking vectorization of a matrix, as a column vector."""
    M = as_matrix(A, "vec")
    check_nonzero(M, "vec")
    return M.reshape(-1, 1, order="F").copy()


def unvec(v, rows: int | None = None) -> np.ndarray:
    """Inverse of :func:`vec`; by default assumes a square target."""
    M = as_matrix(v, "unvec")
    check_nonzero(M, "unvec")
    flat = M.reshape(-1, order="F")
    if rows is None:
        rows = int(round(len(flat) ** 0.5))
        if rows * rows != len(flat):
            raise QuantumError(
                ErrorKind.DIMS_INVALID, "unvec", f"length {len(flat)} is not a perfect square"
            )
    cols, rem = divmod(len(flat), rows)
    if rem:
        raise QuantumError(ErrorKind.DIMS_INVALID, "unvec", f"length {len(flat)} not divisible")
    return flat.reshape(rows, cols, order="F").copy()


def kraus2super(Ks) -> np.ndarray:
    """Superoperator matrix S = sum_i conj(K_i) kron K_i (column-stacking),
    so that vec(channel(rho)) == S @ vec(rho)."""
    ops = _check_kraus(Ks, "kraus2super")
    D = ops[0].shape[0]
    S = np.zeros((D * D, D * D), dtype=np.complex128)
    for K in ops:
        S += np.kron(K.conj(), K)
    return S


def kraus2choi(Ks) -> np.ndarray:
    """Unnormalized Choi matrix J = sum_i vec(K_i) vec(K_i)^dag.

    J is Hermitian PSD; for a trace-preserving channel trace(J) equals the
    space dimension D.
    """
    ops = _check_kraus(Ks, "kraus2choi")
    D = ops[0].shape[0]
    J = np.zeros((D * D, D * D), dtype=np.complex128)
    for K in ops:
        v = K.reshape(-1, 1, order="F")
        J += v @ v.conj().T
    return J


def choi2kraus(J) -> list[np.ndarray]:
    """Kraus operators of the channel with (unnormalized) Choi matrix J.

    Eigendecomposes J and emits sqrt(eigval) * unvec(eigvec) for every
    eigenvalue above the zero-comparison tolerance; the result satisfies
    ``kraus2choi(choi2kraus(J)) == J`` up to numerical error.
    """
    op = "choi2kraus"
    M = as_matrix(J, op)
    check_nonzero(M, op)
    check_square(M, op)
    D = int(round(M.shape[0] ** 0.5))
    if D * D != M.shape[0]:
        raise QuantumError(ErrorKind.DIMS_INVALID, op, f"side {M.shape[0]} is not a perfect square")
    if np.abs(M - M.conj().T).max() > EPS:
        raise QuantumError(ErrorKind.DIMS_INVALID, op, "Choi matrix is not Hermitian")
    evals, V = np.linalg.eigh((M + M.conj().T) / 2)
    if evals[0] < -EPS * max(1.0, float(evals[-1])):
        raise QuantumError(ErrorKind.DIMS_INVALID, op, "Choi matrix is not positive semidefinite")
    out = []
    for lam, v in zip(evals, V.T):
        if lam > EPS:
            out.append(np.sqrt(lam) * v.reshape(D, D, order="F"))
    return out


def ptrace(rho, subsys: Sequence[int], dims: Sequence[int]) -> np.ndarray:
    """Trace OUT the listed subsystems; kets are promoted to projectors.

    The remaining subsystems keep their relative order.
    """
    op = "ptrace"
    ds = check_dims(dims, op)
    D = prod(ds)
    M, is_ket = as_state(rho, D, op)
    if is_ket:
        M = M @ M.conj().T
    ss = check_subsys(subsys, len(ds), op, allow_empty=True)
    if not ss:
        return M.copy()
    n = len(ds)
    keep = [k for k in range(n) if k not in set(ss)]
    dk = prod(ds[k] for k in keep) if keep else 1
    dt = prod(ds[k] for k in ss)
    t = M.reshape(ds + ds)
    t = t.transpose(keep + ss + [n + k for k in keep] + [n + k for k in ss])
    t = t.reshape(dk, dt, dk, dt)
    return np.einsum("icjc->ij", t)


def ptranspose(rho, subsys: Sequence[int], dims: Sequence[int]) -> np.ndarray:
    """Transpose only the listed subsystems' indices; involution.

    Kets are promoted to projectors, as in :func:`ptrace`.
    """
    op = "ptranspose"
    ds = check_dims(dims, op)
    D = prod(ds)
    M, is_ket = as_state(rho, D, op)
    if is_ket:
        M = M @ M.conj().T
    ss = check_subsys(subsys, len(ds), op, allow_empty=True)
    if not ss:
        return M.copy()
    n = len(ds)
    axes = list(range(2 * n))
    for k in ss:
        axes[k], axes[n + k] = axes[n + k], axes[k]
    return M.reshape(ds + ds).transpose(axes).reshape(D, D).copy()


def invperm(perm: Sequence[int]) -> list[int]:
    """Inverse of a permutation: result[perm[k]] == k."""
    p = _check_perm(perm, "invperm")
    out = [0] * len(p)
    for k, v in enumerate(p):
        out[v] = k
    return out


def _check_perm(perm: Sequence[int], op: str) -> list[int]:
    p = [int(x) for x in perm]
    if len(p) == 0 or sorted(p) != list(range(len(p))):
        raise QuantumError(ErrorKind.PERM_INVALID, op, f"{p}")
    return p


def syspermute(state, perm: Sequence[int], dims: Sequence[int]) -> np.ndarray:
    """Relocate subsystem k of the input to position perm[k].

    For kets the amplitude at multi-index m moves to the multi-index m'
    with m'[perm[k]] = m[k]; for square matrices both indices permute. The
    output is laid out over the correspondingly permuted dimensions.
    """
    op = "syspermute"
    ds = check_dims(dims, op)
    p = _check_perm(perm, op)
    if len(p) != len(ds):
        raise QuantumError(
            ErrorKind.SUBSYS_MISMATCH_DIMS,
            op,
            f"permutation length {len(p)} != {len(ds)} subsystems",
        )
    D = prod(ds)
    M, is_ket = as_state(state, D, op)
    n = len(ds)
    # output axis j holds input axis invperm(p)[j]
    src = [0] * n
    for k, v in enumerate(p):
        src[v] = k
    if is_ket:
        return M.reshape(ds).transpose(src).reshape(-1, 1)
    axes = src + [n + k for k in src]
    return M.reshape(ds + ds).transpose(axes).reshape(D, D).copy()
