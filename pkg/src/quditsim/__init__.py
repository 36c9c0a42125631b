"""Dense simulation of composite qudit systems.

States, gates, subsystem-targeted operator application, projective
measurement, Kraus channels with superoperator/Choi conversions, partial
trace/transpose, subsystem permutation, entropies, Haar randomness,
binary matrix I/O, display formatting, and a stopwatch.
"""

from .constants import CHOP, EE, EPS, INFTY, MAXN, PI, omega
from .entropies import entropy, qmutualinfo, shannon
from .exceptions import ErrorKind, QuantumError
from .gates import Fd, GatesRegistry, Xd, Zd, cnot, ctrl_gate, gt
from .indexing import multiidx_to_n, n_to_multiidx, validate_dims
from .iofmt import format_matrix, format_scalar, format_sequence, load, save
from .linalg import adjoint, hevals, hevects, kron, kron_pow, norm, trace, transpose
from .measurement import MeasurementOutcome, measure
from .operations import (
    apply,
    apply_channel,
    apply_ctrl,
    choi2kraus,
    invperm,
    kraus2choi,
    kraus2super,
    ptrace,
    ptranspose,
    syspermute,
    unvec,
    vec,
)
from .randomness import default_rng, rand_ket, rand_perm, rand_rho, rand_unitary, thread_rng
from .states import StatesRegistry, bell00, mket, shor_codeword, st
from .timer import Timer

__version__ = "0.1.0"

__all__ = [
    "CHOP",
    "EE",
    "EPS",
    "INFTY",
    "MAXN",
    "PI",
    "omega",
    "entropy",
    "qmutualinfo",
    "shannon",
    "ErrorKind",
    "QuantumError",
    "Fd",
    "GatesRegistry",
    "Xd",
    "Zd",
    "cnot",
    "ctrl_gate",
    "gt",
    "multiidx_to_n",
    "n_to_multiidx",
    "validate_dims",
    "format_matrix",
    "format_scalar",
    "format_sequence",
    "load",
    "save",
    "adjoint",
    "hevals",
    "hevects",
    "kron",
    "kron_pow",
    "norm",
    "trace",
    "transpose",
    "MeasurementOutcome",
    "measure",
    "apply",
    "apply_channel",
    "apply_ctrl",
    "choi2kraus",
    "invperm",
    "kraus2choi",
    "kraus2super",
    "ptrace",
    "ptranspose",
    "syspermute",
    "unvec",
    "vec",
    "default_rng",
    "rand_ket",
    "rand_perm",
    "rand_rho",
    "rand_unitary",
    "thread_rng",
    "StatesRegistry",
    "bell00",
    "mket",
    "shor_codeword",
    "st",
    "Timer",
]
