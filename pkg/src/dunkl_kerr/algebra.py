"""Scalar kernel for the Dunkl-deformed ladder algebra.

The deformation replaces the integer n by the Dunkl integer
``[n]_mu = n + mu*(1 - (-1)**n)``: even levels are untouched, odd levels are
shifted up by ``2*mu``. Ladder amplitudes, su(1,1) generator actions and the
energy spectrum are all built from these scalars, so everything in this
module is an exact closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "ModelParams",
    "reflection_eigenvalue",
    "dunkl_integer",
    "dunkl_factorial_ln",
    "ladder_down_amp",
    "k0_eigenvalue",
    "kplus_amp",
    "kminus_amp",
    "casimir_eigenvalue",
    "bargmann_index",
]


@dataclass(frozen=True)
class ModelParams:
    """Full experiment configuration (natural units, hbar = 1).

    mu     Dunkl deformation parameter, mu >= 0 (mu = 0 is the standard Kerr medium)
    omega  field frequency, omega > 0
    lam    Kerr/anharmonicity constant, lam >= 0
    alpha  coherent amplitude, restricted to real alpha >= 0
    """

    mu: float = 0.0
    omega: float = 20.0
    lam: float = 1.0
    alpha: float = 2.0

    def __post_init__(self):
        for name in ("mu", "omega", "lam", "alpha"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite, got {getattr(self, name)}")
        if not self.mu >= 0:
            raise ValueError(f"mu must be >= 0, got {self.mu}")
        if not self.omega > 0:
            raise ValueError(f"omega must be > 0, got {self.omega}")
        if not self.lam >= 0:
            raise ValueError(f"lambda must be >= 0, got {self.lam}")
        if not self.alpha >= 0:
            raise ValueError(f"alpha must be real and >= 0, got {self.alpha}")


def reflection_eigenvalue(n: int) -> int:
    """Parity eigenvalue (-1)**n of the reflection operator on number state n."""
    return 1 if n % 2 == 0 else -1


def dunkl_integer(n: int, mu: float) -> float:
    """Dunkl integer [n]_mu = n + mu*(1 - (-1)**n)."""
    if n < 0:
        raise ValueError(f"quantum number must be non-negative, got {n}")
    return n + 2.0 * mu if n % 2 else float(n)


def dunkl_factorial_ln(n: int, mu: float) -> float:
    """log([n]_mu!) with [n]_mu! = [n]_mu [n-1]_mu ... [1]_mu and [0]_mu! = 1.

    Accumulated as a running sum of logs: the raw product overflows double
    precision near n = 170 while the coefficients built from it stay tame.
    """
    if n < 0:
        raise ValueError(f"quantum number must be non-negative, got {n}")
    total = 0.0
    for k in range(1, n + 1):
        factor = dunkl_integer(k, mu)
        if factor <= 0.0:
            raise ValueError(f"Dunkl factorial undefined: factor [{k}]_mu = {factor} <= 0")
        total += math.log(factor)
    return total


def ladder_down_amp(n: int, mu: float) -> float:
    """Annihilation amplitude sqrt([n]_mu) taking number state n to n - 1."""
    return math.sqrt(dunkl_integer(n, mu))


def k0_eigenvalue(n: int, mu: float) -> float:
    """Eigenvalue of the Cartan generator K0 on number state n.

    K0 = (a_dag a + a a_dag)/4 and its eigenvalue is
    ([n]_mu + 1/2 + mu*(-1)**n)/2, stepping by exactly one inside each
    parity sector.
    """
    return 0.5 * (dunkl_integer(n, mu) + 0.5 + mu * reflection_eigenvalue(n))


def kplus_amp(n: int, mu: float) -> float:
    """Raising amplitude of K+ = a_dag^2/2: (1/2)sqrt([n+1]_mu [n+2]_mu)."""
    return 0.5 * math.sqrt(dunkl_integer(n + 1, mu) * dunkl_integer(n + 2, mu))


def kminus_amp(n: int, mu: float) -> float:
    """Lowering amplitude of K- = a^2/2: (1/2)sqrt([n]_mu [n-1]_mu), zero for n < 2."""
    if n < 0:
        raise ValueError(f"quantum number must be non-negative, got {n}")
    if n < 2:
        return 0.0
    return 0.5 * math.sqrt(dunkl_integer(n, mu) * dunkl_integer(n - 1, mu))


def _check_parity(parity: int) -> None:
    if parity not in (1, -1):
        raise ValueError(f"parity must be +1 or -1, got {parity}")


def casimir_eigenvalue(parity: int, mu: float) -> float:
    """Casimir eigenvalue mu^2/4 - mu*parity/4 - 3/16 of the su(1,1) irrep.

    Equals k(k - 1) with k the Bargmann index of the given parity sector.
    """
    _check_parity(parity)
    return 0.25 * mu * mu - 0.25 * mu * parity - 3.0 / 16.0


def bargmann_index(parity: int, mu: float) -> float:
    """Lowest weight of the parity sector: 1/4 + mu/2 (even), 3/4 + mu/2 (odd)."""
    _check_parity(parity)
    return 0.25 + 0.5 * mu if parity == 1 else 0.75 + 0.5 * mu
