"""Exactly solvable simulator for the Dunkl-deformed anharmonic (Kerr) oscillator.

The package computes the parity-split energy spectrum, evolves superposed
even+odd Dunkl coherent states in closed form, and produces time series for
the field quadrature, the survival probability and the quadrature variance.
A dense truncated-Fock matrix path (`fock_matrix`, `verify`) independently
reproduces every observable for validation.
"""

from .algebra import (
    ModelParams,
    bargmann_index,
    casimir_eigenvalue,
    dunkl_factorial_ln,
    dunkl_integer,
    k0_eigenvalue,
    kminus_amp,
    kplus_amp,
    ladder_down_amp,
    reflection_eigenvalue,
)
from .dynamics import (
    CHANNEL_NAMES,
    TimeGrid,
    TimeSeries,
    evaluate_series,
    k0_expectation,
    kminus_expectation,
    quadrature_expectation,
    quadrature_variance,
    survival_probability,
)
from .spectrum import energy, gap_even, gap_odd, neighbor_gap
from .states import (
    CoherentStateVector,
    TruncationError,
    TruncationPolicy,
    build_state,
    parity_projection,
    probability,
)
from .verify import matrix_observables, verification_report

__version__ = "0.1.0"

__all__ = [
    "ModelParams",
    "bargmann_index",
    "casimir_eigenvalue",
    "dunkl_factorial_ln",
    "dunkl_integer",
    "k0_eigenvalue",
    "kminus_amp",
    "kplus_amp",
    "ladder_down_amp",
    "reflection_eigenvalue",
    "energy",
    "gap_even",
    "gap_odd",
    "neighbor_gap",
    "CoherentStateVector",
    "TruncationError",
    "TruncationPolicy",
    "build_state",
    "parity_projection",
    "probability",
    "CHANNEL_NAMES",
    "TimeGrid",
    "TimeSeries",
    "evaluate_series",
    "k0_expectation",
    "kminus_expectation",
    "quadrature_expectation",
    "quadrature_variance",
    "survival_probability",
    "matrix_observables",
    "verification_report",
    "__version__",
]
