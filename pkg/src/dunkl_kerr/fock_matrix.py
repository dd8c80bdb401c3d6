"""Brute-force verification path on a truncated Fock space.

Everything here is deliberately dumb: operators are dense complex matrices
assembled entry by entry or by explicit matrix products, states evolve by
phase multiplication on the Hamiltonian diagonal, and observables come from
matrix-vector expectation values. The closed-form series in `dynamics` and
`spectrum` must reproduce these numbers; any disagreement localizes a bug.

Truncation breaks ladder identities in the top rows, so algebra checks are
restricted to an interior block away from the boundary.
"""

from __future__ import annotations

import math

import numpy as np

from .algebra import ModelParams, dunkl_integer
from .states import CoherentStateVector

__all__ = [
    "NotDiagonalError",
    "GUARD_LEVELS",
    "build_annihilation",
    "build_creation",
    "build_reflection",
    "build_number",
    "build_k0",
    "build_kplus",
    "build_kminus",
    "build_quadrature",
    "build_hamiltonian",
    "embed_state",
    "oracle_dim",
    "evolve",
    "expectation",
    "check_algebra",
]

# Guard band above the coherent-state cutoff: a_dag and K+ push amplitude at
# most two levels up, so a handful of empty levels keeps boundary error far
# below the cross-check tolerances.
GUARD_LEVELS = 8


class NotDiagonalError(ValueError):
    """Hamiltonian expected to be diagonal in the number basis is not."""


def build_annihilation(dim: int, mu: float) -> np.ndarray:
    """Annihilation matrix with A[n-1, n] = sqrt([n]_mu)."""
    if dim < 2:
        raise ValueError(f"dim must be >= 2, got {dim}")
    a = np.zeros((dim, dim), dtype=complex)
    for n in range(1, dim):
        a[n - 1, n] = math.sqrt(dunkl_integer(n, mu))
    return a


def build_creation(dim: int, mu: float) -> np.ndarray:
    return build_annihilation(dim, mu).conj().T


def build_reflection(dim: int) -> np.ndarray:
    """Reflection operator, diagonal (-1)**n."""
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    return np.diag([(-1.0) ** n for n in range(dim)]).astype(complex)


def build_number(dim: int, mu: float) -> np.ndarray:
    """Number operator a_dag a, diagonal [n]_mu."""
    a = build_annihilation(dim, mu)
    return a.conj().T @ a


def build_k0(dim: int, mu: float) -> np.ndarray:
    """K0 = (a_dag a + a a_dag)/4 by explicit products."""
    a = build_annihilation(dim, mu)
    ad = a.conj().T
    return 0.25 * (ad @ a + a @ ad)


def build_kplus(dim: int, mu: float) -> np.ndarray:
    """K+ = a_dag^2 / 2."""
    ad = build_creation(dim, mu)
    return 0.5 * (ad @ ad)


def build_kminus(dim: int, mu: float) -> np.ndarray:
    """K- = a^2 / 2."""
    a = build_annihilation(dim, mu)
    return 0.5 * (a @ a)


def build_quadrature(dim: int, mu: float) -> np.ndarray:
    """Field quadrature X = (a + a_dag)/sqrt(2)."""
    a = build_annihilation(dim, mu)
    return (a + a.conj().T) / math.sqrt(2.0)


def build_hamiltonian(dim: int, params: ModelParams) -> np.ndarray:
    """H = omega a_dag a + (lam/2) a_dag^2 a^2 assembled by matrix products.

    The products of the banded ladder matrices land exactly on the diagonal,
    whose entries are the energies E_n.
    """
    a = build_annihilation(dim, params.mu)
    ad = a.conj().T
    return params.omega * (ad @ a) + 0.5 * params.lam * (ad @ ad @ a @ a)


def embed_state(state: CoherentStateVector, dim: int) -> np.ndarray:
    """Normalized coherent-state coefficients zero-padded into a dim-level space."""
    if dim < state.n_cut + 1:
        raise ValueError(f"dim = {dim} cannot hold a state truncated at n_cut = {state.n_cut}")
    vec = np.zeros(dim, dtype=complex)
    vec[: state.n_cut + 1] = state.normalized()
    return vec


def oracle_dim(state: CoherentStateVector) -> int:
    """Default matrix dimension: the state's levels plus the guard band."""
    return state.n_cut + 1 + GUARD_LEVELS


def evolve(state_vec: np.ndarray, hamiltonian: np.ndarray, t: float, off_diag_tol: float = 1e-10) -> np.ndarray:
    """Apply exp(-i H t) to a vector for an H diagonal in the number basis.

    Raises NotDiagonalError when the off-diagonal mass exceeds tolerance,
    which signals a broken assembly rather than a physical regime.
    """
    h = np.asarray(hamiltonian)
    diag = np.diag(h)
    mass = float(np.max(np.abs(h - np.diag(diag)))) if h.size else 0.0
    if mass > off_diag_tol:
        raise NotDiagonalError(f"off-diagonal mass {mass:.3e} exceeds tolerance {off_diag_tol:g}")
    vec = np.asarray(state_vec, dtype=complex)
    if vec.shape != (h.shape[0],):
        raise ValueError(f"state vector length {vec.shape} does not match dim {h.shape[0]}")
    return np.exp(-1j * diag.real * t) * vec


def expectation(bra_vec: np.ndarray, op: np.ndarray, ket_vec: np.ndarray) -> complex:
    """<bra| op |ket> = conj(bra)^T op ket."""
    bra = np.asarray(bra_vec, dtype=complex)
    ket = np.asarray(ket_vec, dtype=complex)
    op = np.asarray(op)
    if op.shape != (bra.shape[0], ket.shape[0]):
        raise ValueError(f"dimension mismatch: bra {bra.shape}, op {op.shape}, ket {ket.shape}")
    return complex(np.vdot(bra, op @ ket))


def check_algebra(dim: int, mu: float) -> dict[str, float]:
    """Max-abs interior-block deviation of the defining operator relations.

    Covers the deformed canonical commutator [a, a_dag] = 1 + 2 mu R, the
    anticommutator {R, a} = 0, the su(1,1) relations of K0 and K+-, and the
    conservation laws [H, N] = [H, R] = 0. First-order relations are checked
    on indices 0..dim-3 and two-step relations on 0..dim-5; the excluded
    rows carry unavoidable truncation artifacts. The conservation checks use
    the default omega and lam, on which they cannot depend (everything is
    diagonal).
    """
    if dim < 8:
        raise ValueError(f"dim must be >= 8 for meaningful interior blocks, got {dim}")
    a = build_annihilation(dim, mu)
    ad = a.conj().T
    identity = np.eye(dim, dtype=complex)
    refl = build_reflection(dim)
    k0 = build_k0(dim, mu)
    kp = build_kplus(dim, mu)
    km = build_kminus(dim, mu)
    ham = build_hamiltonian(dim, ModelParams(mu=mu))
    num = build_number(dim, mu)

    first_order = slice(0, dim - 2)  # indices 0..dim-3
    two_step = slice(0, dim - 4)  # indices 0..dim-5

    def dev(residual: np.ndarray, block: slice) -> float:
        return float(np.max(np.abs(residual[block, block])))

    return {
        "comm_a_adag": dev(a @ ad - ad @ a - (identity + 2.0 * mu * refl), first_order),
        "anticomm_r_a": dev(refl @ a + a @ refl, first_order),
        "comm_k0_kplus": dev(k0 @ kp - kp @ k0 - kp, two_step),
        "comm_k0_kminus": dev(k0 @ km - km @ k0 + km, two_step),
        "comm_kminus_kplus": dev(km @ kp - kp @ km - 2.0 * k0, two_step),
        "comm_h_n": dev(ham @ num - num @ ham, two_step),
        "comm_h_r": dev(ham @ refl - refl @ ham, two_step),
    }
