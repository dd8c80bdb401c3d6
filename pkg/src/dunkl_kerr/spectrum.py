"""Exact energy spectrum of the Dunkl Kerr Hamiltonian.

H = omega * a_dag a + (lam/2) * a_dag^2 a^2 with Dunkl ladder operators is
diagonal in the number basis and splits into decoupled parity sectors:

    E_{2m}   = 2 lam m^2 + m (2 omega + 2 lam mu - lam)
    E_{2m+1} = 2 lam m^2 + m (2 omega + 2 lam mu + lam) + omega (1 + 2 mu)

At mu = 0 both sectors collapse onto the standard anharmonic ladder
omega*n + (lam/2)*n*(n-1). The quadratic m term is what dephases wave
packets and drives collapse and revival.
"""

from __future__ import annotations

from .algebra import ModelParams

__all__ = ["energy", "gap_even", "gap_odd", "neighbor_gap"]


def energy(n: int, params: ModelParams) -> float:
    """Exact eigenvalue E_n from the closed parity-split forms. E_0 = 0."""
    if n < 0:
        raise ValueError(f"quantum number must be non-negative, got {n}")
    mu, omega, lam = params.mu, params.omega, params.lam
    m = n // 2
    base = 2.0 * lam * m * m
    if n % 2 == 0:
        return base + m * (2.0 * omega + 2.0 * lam * mu - lam)
    return base + m * (2.0 * omega + 2.0 * lam * mu + lam) + omega * (1.0 + 2.0 * mu)


def gap_even(m: int, params: ModelParams) -> float:
    """Next-nearest gap in the even sector, E_{2m+2} - E_{2m} = 2w + lam(4m + 2mu + 1)."""
    if m < 0:
        raise ValueError(f"sector index must be non-negative, got {m}")
    return 2.0 * params.omega + params.lam * (4.0 * m + 2.0 * params.mu + 1.0)


def gap_odd(m: int, params: ModelParams) -> float:
    """Next-nearest gap in the odd sector, E_{2m+3} - E_{2m+1} = 2w + lam(4m + 2mu + 3)."""
    if m < 0:
        raise ValueError(f"sector index must be non-negative, got {m}")
    return 2.0 * params.omega + params.lam * (4.0 * m + 2.0 * params.mu + 3.0)


def neighbor_gap(n: int, params: ModelParams) -> float:
    """One-step gap E_{n+1} - E_n, the oscillation frequency of the quadrature signal."""
    return energy(n + 1, params) - energy(n, params)
