"""Human-readable matrix display and the QSIM binary matrix format.

Display renders entries as ``a+bi`` with a fixed number of digits after
the decimal point (trailing zeros trimmed); components below the chop
threshold print as zero, and pure-real entries drop the imaginary term.

The QSIM byte layout (little-endian throughout):

    offset  size  field
    0       4     magic bytes b"QSIM"
    4       1     format version, 0x01
    5       8     rows, unsigned 64-bit
    13      8     cols, unsigned 64-bit
    21      -     rows*cols entries, row-major, each two IEEE-754
                  binary64 values (real part, imaginary part)

Save/load round-trips are bitwise exact.
"""

from __future__ import annotations

import struct
from pathlib import Path
from typing import Iterable

import numpy as np

from ._checks import as_matrix, check_nonzero
from .constants import CHOP
from .exceptions import ErrorKind, QuantumError

MAGIC = b"QSIM"
VERSION = 1

_HEADER = struct.Struct("<4sBQQ")


def _fmt_component(x: float, precision: int) -> str:
    s = f"{x:.{precision}f}"
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    if s in ("-0", ""):
        s = "0"
    return s


def format_scalar(z: complex, precision: int = 4, chop: float = CHOP) -> str:
    """Render one complex number as ``a+bi``, chopping tiny components."""
    z = complex(z)
    re = 0.0 if abs(z.real) < chop else z.real
    im = 0.0 if abs(z.imag) < chop else z.imag
    rs = _fmt_component(re, precision)
    ims = _fmt_component(im, precision)
    if ims == "0":
        return rs
    if rs == "0":
        return f"{ims}i"
    sep = "" if ims.startswith("-") else "+"
    return f"{rs}{sep}{ims}i"


def format_matrix(A, precision: int = 4, chop: float = CHOP) -> str:
    """Multi-line, column-aligned rendering of a matrix.

    The empty matrix renders as ``[]``.
    """
    M = np.asarray(A, dtype=np.complex128)
    if M.ndim == 1:
        M = M.reshape(-1, 1)
    if M.size == 0:
        return "[]"
    cells = [[format_scalar(z, precision, chop) for z in row] for row in M]
    widths = [max(len(cells[i][j]) for i in range(M.shape[0])) for j in range(M.shape[1])]
    return "\n".join(
        " ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in cells
    )


def format_sequence(xs: Iterable, delimiter: str = " ", precision: int = 4, chop: float = CHOP) -> str:
    """Join a sequence of numbers/strings with a delimiter."""
    parts = []
    for x in xs:
        if isinstance(x, str):
            parts.append(x)
        elif isinstance(x, (int, np.integer)):
            parts.append(str(int(x)))
        else:
            parts.append(format_scalar(complex(x), precision, chop))
    return delimiter.join(parts)


def save(A, sink) -> None:
    """Write a matrix to a binary stream or path in the QSIM format."""
    M = as_matrix(A, "save")
    check_nonzero(M, "save")
    header = _HEADER.pack(MAGIC, VERSION, M.shape[0], M.shape[1])
    payload = np.ascontiguousarray(M, dtype="<c16").tobytes()
    if isinstance(sink, (str, Path)):
        try:
            with open(sink, "wb") as fh:
                fh.write(header)
                fh.write(payload)
        except OSError as exc:
            raise QuantumError(ErrorKind.IO_ERROR, "save", str(exc)) from None
        return
    try:
        sink.write(header)
        sink.write(payload)
    except (OSError, ValueError) as exc:  # ValueError: closed stream
        raise QuantumError(ErrorKind.IO_ERROR, "save", str(exc)) from None


def load(source) -> np.ndarray:
    """Read back a matrix written by :func:`save`, bit for bit."""
    if isinstance(source, (str, Path)):
        try:
            with open(source, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise QuantumError(ErrorKind.IO_ERROR, "load", str(exc)) from None
    elif isinstance(source, (bytes, bytearray)):
        data = bytes(source)
    else:
        try:
            data = source.read()
        except (OSError, ValueError) as exc:  # ValueError: closed stream
            raise QuantumError(ErrorKind.IO_ERROR, "load", str(exc)) from None
    if len(data) < _HEADER.size:
        raise QuantumError(ErrorKind.IO_ERROR, "load", "truncated header")
    magic, version, rows, cols = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise QuantumError(ErrorKind.IO_ERROR, "load", "bad magic bytes")
    if version != VERSION:
        raise QuantumError(ErrorKind.IO_ERROR, "load", f"unsupported version {version}")
    if rows == 0 or cols == 0:
        raise QuantumError(ErrorKind.IO_ERROR, "load", "empty matrix record")
    expected = _HEADER.size + 16 * rows * cols
    if len(data) < expected:
        raise QuantumError(ErrorKind.IO_ERROR, "load", "truncated payload")
    flat = np.frombuffer(data, dtype="<c16", count=rows * cols, offset=_HEADER.size)
    return flat.astype(np.complex128).reshape(rows, cols)
