"""Bound-state spectrum of two equal-mass charged scalars with Coulomb attraction.

Natural units c = hbar = 1; distances in Yukawa radii, masses in units of
the meson rest mass (so ``m = 1`` by default). The coupling ``alpha`` is the
dimensionless Coulomb strength in ``V(r) = -alpha / r``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .specfun import DomainError

__all__ = [
    "CriticalCouplingError",
    "StateLabel",
    "SystemConfig",
    "SpectralParams",
    "compute_xi",
    "bound_mass",
    "binding_energy",
]


class CriticalCouplingError(DomainError):
    """Raised when alpha >= 2l + 1 and the effective angular index is not real."""


@dataclass(frozen=True)
class StateLabel:
    """Radial (n) and orbital (l) quantum numbers."""

    n: int
    l: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.l < 0 or int(self.n) != self.n or int(self.l) != self.l:
            raise DomainError(f"quantum numbers must be nonnegative integers, got n={self.n}, l={self.l}")


@dataclass(frozen=True)
class SystemConfig:
    alpha: float
    m: float = 1.0

    def __post_init__(self) -> None:
        if not self.alpha > 0:
            raise DomainError(f"alpha must be > 0, got {self.alpha!r}")
        if not self.m > 0:
            raise DomainError(f"m must be > 0, got {self.m!r}")


@dataclass(frozen=True)
class SpectralParams:
    """Derived parameters of one bound state.

    Attributes:
        xi: effective angular index sqrt((l + 1/2)**2 - alpha**2 / 4).
        bigN: effective principal number n + 1/2 + xi.
        mass: total bound mass M.
        k: momentum scale sqrt(4 m**2 - M**2).
        lambda_: Coulomb parameter M alpha / (2 k); equals bigN on shell.
        n1: non-relativistic principal number n + l + 1.
    """

    state: StateLabel
    xi: float
    bigN: float
    mass: float
    k: float
    lambda_: float
    n1: int


def compute_xi(l: int, alpha: float) -> float:
    if alpha < 0:
        raise DomainError(f"alpha must be >= 0, got {alpha!r}")
    if alpha >= 2 * l + 1:
        raise CriticalCouplingError(f"critical coupling: alpha >= 2l+1 (alpha={alpha}, l={l})")
    # (l + 1/2 - alpha/2)(l + 1/2 + alpha/2) avoids cancellation near the critical coupling.
    return math.sqrt((l + 0.5 - alpha / 2) * (l + 0.5 + alpha / 2))


def bound_mass(state: StateLabel, config: SystemConfig) -> SpectralParams:
    """Spectral parameters from M = 2m / sqrt(1 + alpha**2 / (4 N**2))."""
    alpha, m = config.alpha, config.m
    xi = compute_xi(state.l, alpha)
    big_n = state.n + 0.5 + xi
    mass = 2.0 * m / math.sqrt(1.0 + alpha * alpha / (4.0 * big_n * big_n))
    # Closed form of sqrt(4m^2 - M^2); the difference form cancels badly for small alpha.
    k = 2.0 * m * alpha / math.sqrt(4.0 * big_n * big_n + alpha * alpha)
    return SpectralParams(
        state=state,
        xi=xi,
        bigN=big_n,
        mass=mass,
        k=k,
        lambda_=mass * alpha / (2.0 * k),
        n1=state.n + state.l + 1,
    )


def binding_energy(params: SpectralParams, config: SystemConfig) -> float:
    """2m - M, evaluated as k**2 / (2m + M) to stay accurate as alpha -> 0."""
    return params.k * params.k / (2.0 * config.m + params.mass)
