"""Projective measurement of arbitrary subsystems in a supplied basis.

Measurement here is destructive: the measured subsystems are removed from
the post-measurement states, which live on the remaining subsystems. A
measurement of everything leaves the trivial one-dimensional state [[1]].
"""

from __future__ import annotations

from math import prod
from typing import NamedTuple, Sequence

import numpy as np

from ._checks import as_matrix, as_state, check_dims, check_nonzero, check_square, check_subsys
from .constants import EPS
from .exceptions import ErrorKind, QuantumError
from .randomness import thread_rng


class MeasurementOutcome(NamedTuple):
    """Sampled outcome index, all outcome probabilities, and every
    post-measurement state (kets for ket input, matrices for matrix input).

    Outcomes with zero probability carry a zero-size sentinel state and
    are never sampled.
    """

    result: int
    probs: list[float]
    states: list[np.ndarray]


def _sample(probs: np.ndarray, rng: np.random.Generator) -> int:
    # inverse CDF with one uniform draw; zero-probability entries collapse
    # to repeated cumulative values and can never be selected
    cum = np.cumsum(probs)
    u = rng.random() * cum[-1]
    return min(int(np.searchsorted(cum, u, side="right")), len(probs) - 1)


def measure(
    state,
    basis,
    subsys: Sequence[int],
    dims: Sequence[int],
    rng: np.random.Generator | None = None,
) -> MeasurementOutcome:
    """Measure ``subsys`` of a ket or density matrix in an orthonormal basis.

    Args:
        state: column ket of length prod(dims) or square matrix of that side.
        basis: square matrix whose COLUMNS are the measurement basis vectors,
            of side prod(dims[k] for k in subsys).
        subsys: distinct subsystem indices to measure (and remove).
        dims: dimension of each subsystem.
        rng: generator used for the single outcome draw; defaults to the
            per-thread generator.

    Returns:
        A :class:`MeasurementOutcome`; ``probs[i]`` is the Born probability
        of basis column i and ``states[i]`` the normalized state of the
        unmeasured subsystems given that outcome.
    """
    op = "measure"
    ds = check_dims(dims, op)
    D = prod(ds)
    M, is_ket = as_state(state, D, op)
    B = as_matrix(basis, op)
    check_nonzero(B, op)
    check_square(B, op)
    ss = check_subsys(subsys, len(ds), op)
    dsub = [ds[k] for k in ss]
    Dsub = prod(dsub)
    if B.shape[0] != Dsub:
        raise QuantumError(
            ErrorKind.DIMS_MISMATCH_MATRIX,
            op,
            f"basis side {B.shape[0]} != product of measured dimensions {Dsub}",
        )
    if np.abs(B.conj().T @ B - np.eye(Dsub)).max() > EPS:
        raise QuantumError(ErrorKind.DIMS_MISMATCH_MATRIX, op, "basis columns not orthonormal")
    if rng is None:
        rng = thread_rng()

    n = len(ds)
    s = len(ss)
    rest = D // Dsub
    probs = np.empty(Dsub)
    states: list[np.ndarray] = []

    if is_ket:
        t = M.reshape(ds)
        for i in range(Dsub):
            bt = B[:, i].conj().reshape(dsub)
            phi = np.tensordot(bt, t, axes=(list(range(s)), ss)).reshape(-1, 1)
            p = float(np.linalg.norm(phi) ** 2)
            probs[i] = p
            if p <= EPS:
                states.append(np.zeros((0, 1), dtype=np.complex128))
            elif rest == 1:
                states.append(np.ones((1, 1), dtype=np.complex128))
            else:
                states.append(phi / np.sqrt(p))
    else:
        t = M.reshape(ds + ds)
        colpos = [n - s + k for k in ss]  # column axes after the row contraction
        for i in range(Dsub):
            bt = B[:, i].reshape(dsub)
            red = np.tensordot(bt.conj(), t, axes=(list(range(s)), ss))
            red = np.tensordot(red, bt, axes=(colpos, list(range(s))))
            red = red.reshape(rest, rest)
            p = float(np.trace(red).real)
            probs[i] = max(p, 0.0)
            if probs[i] <= EPS:
                states.append(np.zeros((0, 0), dtype=np.complex128))
            elif rest == 1:
                states.append(np.ones((1, 1), dtype=np.complex128))
            else:
                states.append(red / p)

    result = _sample(probs, rng)
    return MeasurementOutcome(result, [float(p) for p in probs], states)
