"""Numeric constants and the primitive root of unity."""

from __future__ import annotations

import cmath
import math
import sys

from .exceptions import ErrorKind, QuantumError

PI = math.pi
EE = math.e

# Tolerance for comparing floating point values to zero.
EPS = 1e-12

# Display threshold: components smaller than this render as zero.
CHOP = 1e-10

# Maximum number of subsystems in a composite space; keeps linear indices
# inside one machine word for dimensions >= 2.
MAXN = 64

INFTY = sys.float_info.max  # largest finite double


def omega(D: int) -> complex:
    """D-th principal root of unity exp(2*pi*i/D)."""
    if D < 1:
        raise QuantumError(ErrorKind.OUT_OF_RANGE, "omega", f"D={D}")
    return cmath.exp(2j * PI / D)
