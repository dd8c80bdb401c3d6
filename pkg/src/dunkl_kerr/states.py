"""Truncated coefficient representation of the superposed Dunkl coherent state.

The initial state of the dynamics is the eigenstate of the Dunkl annihilation
operator written over both parity sectors at once,

    |psi(0)> = N * sum_n  alpha^n / sqrt([n]_mu!)  |n>,

which is exactly the superposition of its even and odd branches. Only the
truncated coefficient vector is stored; the basis is the orthonormal Dunkl
number basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import ModelParams, dunkl_integer

__all__ = [
    "TruncationError",
    "TruncationPolicy",
    "CoherentStateVector",
    "build_state",
    "probability",
    "parity_projection",
]

_LOOKAHEAD = 8


class TruncationError(RuntimeError):
    """Coefficient tail failed to decay below tolerance before the hard cap."""


@dataclass(frozen=True)
class TruncationPolicy:
    """Relative tail tolerance and hard cap for the coefficient cutoff."""

    tail_tol: float = 1e-16
    n_max_hard: int = 512

    def __post_init__(self):
        if not 0.0 < self.tail_tol < 1.0:
            raise ValueError(f"tail_tol must lie in (0, 1), got {self.tail_tol}")
        if self.n_max_hard < 8:
            raise ValueError(f"n_max_hard must be >= 8, got {self.n_max_hard}")


@dataclass(frozen=True)
class CoherentStateVector:
    """Truncated coherent-state coefficients c_n = alpha^n / sqrt([n]_mu!).

    coeffs holds the unnormalized c_n for n = 0..n_cut; norm_const is
    1/sqrt(sum c_n^2) so that norm_const * coeffs is the physical amplitude
    vector. Immutable after construction.
    """

    coeffs: np.ndarray
    n_cut: int
    norm_const: float
    params: ModelParams

    def normalized(self) -> np.ndarray:
        return self.norm_const * self.coeffs


def build_state(params: ModelParams, policy: TruncationPolicy = TruncationPolicy()) -> CoherentStateVector:
    """Construct the truncated coherent-state vector for the given parameters.

    The cutoff is the smallest n >= 2 at which every unnormalized weight
    w_k = alpha^(2k) / [k]_mu! inside a lookahead window of 8 sits below
    tail_tol times the running peak weight. The lookahead guards against
    cutting off too early on the parity oscillation of the weights near the
    peak. All factorial-weighted coefficients are formed in log space and
    exponentiated at the end.

    Raises TruncationError if no such cutoff exists below n_max_hard, which
    signals that alpha is too large for the policy.
    """
    alpha, mu = params.alpha, params.mu
    if alpha == 0.0:
        coeffs = np.zeros(3)
        coeffs[0] = 1.0
        return CoherentStateVector(coeffs=coeffs, n_cut=2, norm_const=1.0, params=params)

    log_alpha = math.log(alpha)
    log_tol = math.log(policy.tail_tol)

    # lnfact[n] = log([n]_mu!), logw[n] = log(alpha^(2n) / [n]_mu!)
    lnfact = [0.0]
    logw = [0.0]

    def extend_to(m: int) -> None:
        while len(logw) <= m:
            k = len(logw)
            lnfact.append(lnfact[-1] + math.log(dunkl_integer(k, mu)))
            logw.append(2.0 * k * log_alpha - lnfact[k])

    extend_to(1)
    running_peak = max(logw[0], logw[1])
    n_cut = -1
    for n in range(2, policy.n_max_hard + 1):
        extend_to(n + _LOOKAHEAD - 1)
        running_peak = max(running_peak, logw[n])
        if all(logw[k] < log_tol + running_peak for k in range(n, n + _LOOKAHEAD)):
            n_cut = n
            break
    if n_cut < 0:
        raise TruncationError(
            f"coefficient tail still above tail_tol = {policy.tail_tol:g} of the peak at "
            f"n = {policy.n_max_hard}; alpha = {alpha:g} is too large for this policy"
        )

    coeffs = np.array([math.exp(k * log_alpha - 0.5 * lnfact[k]) for k in range(n_cut + 1)])
    norm_const = 1.0 / math.sqrt(math.fsum(c * c for c in coeffs))
    return CoherentStateVector(coeffs=coeffs, n_cut=n_cut, norm_const=norm_const, params=params)


def probability(state: CoherentStateVector, n: int) -> float:
    """Stationary photon-number probability (norm_const * c_n)^2; zero above the cutoff."""
    if n < 0:
        raise ValueError(f"quantum number must be non-negative, got {n}")
    if n > state.n_cut:
        return 0.0
    return (state.norm_const * float(state.coeffs[n])) ** 2


def parity_projection(state: CoherentStateVector, parity: int) -> CoherentStateVector:
    """Zero out the opposite-parity coefficients and renormalize.

    The result is a definite-parity state on the same truncated ladder; its
    field quadrature expectation vanishes identically.
    """
    if parity not in (1, -1):
        raise ValueError(f"parity must be +1 or -1, got {parity}")
    coeffs = state.coeffs.copy()
    if parity == 1:
        coeffs[1::2] = 0.0
    else:
        coeffs[0::2] = 0.0
    total = math.fsum(c * c for c in coeffs)
    if total == 0.0:
        raise ValueError("projected sector carries no weight; cannot renormalize")
    return CoherentStateVector(
        coeffs=coeffs, n_cut=state.n_cut, norm_const=1.0 / math.sqrt(total), params=state.params
    )
