"""Structured errors raised by the library.

Every public operation validates its inputs eagerly and raises a
:class:`QuantumError` carrying one :class:`ErrorKind` plus the name of the
operation that rejected the input, so failures are machine-checkable and
the message always tells you where to look.
"""

from __future__ import annotations

import enum


class ErrorKind(enum.Enum):
    ZERO_SIZE = "object has zero size"
    DIMS_INVALID = "invalid dimension(s)"
    DIMS_MISMATCH_MATRIX = "dimension(s) mismatch matrix size"
    SUBSYS_MISMATCH_DIMS = "subsystems mismatch dimensions"
    MATRIX_NOT_SQUARE = "matrix is not square"
    PERM_INVALID = "invalid permutation"
    OUT_OF_RANGE = "parameter out of range"
    NOT_KET = "matrix is not a column vector"
    NOT_SQUARE_NOR_KET = "matrix is not square nor a column vector"
    INDEX_OUT_OF_BOUNDS = "index out of bounds"
    IO_ERROR = "input/output error"


class QuantumError(Exception):
    """Error raised by library operations on invalid input or failed I/O.

    Attributes:
        kind: the :class:`ErrorKind` classifying the failure.
        op: public name of the operation that raised.
    """

    def __init__(self, kind: ErrorKind, op: str, detail: str = ""):
        self.kind = kind
        self.op = op
        self.detail = detail
        msg = f"{op}(): {kind.value}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
