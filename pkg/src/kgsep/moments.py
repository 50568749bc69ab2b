"""Closed-form expectation values and the separability coefficients B, D.

The closed forms carry a common prefactor

    G = C**2 Gamma(2xi+1)**2 n! / Gamma(2xi+1+n)

which collapses to k**3 / (2n + 2xi + 1) once C**2 is substituted. Both the
prefactor ("verbatim") and the collapsed ("simplified") forms are exposed so
they can be checked against each other and against the term-wise oracle.

The <r**2> moment depends on a combinatorial factor F0. The printed F0 agrees
with exact integration only for n = 0; :class:`Mode` selects which one feeds
every downstream quantity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .specfun import log_gamma, rho_moment_oracle
from .spectrum import SpectralParams, StateLabel, SystemConfig, bound_mass
from .wavefunction import Mode, RadialMoments, kg_p2, log_norm_c2

__all__ = [
    "Mode",
    "ClosedFormMoments",
    "CriterionCoefficients",
    "paper_f0",
    "oracle_f0",
    "candidate_rho2",
    "f0_for_mode",
    "closed_form_moments",
    "simplified_moments",
    "radial_moments",
    "criterion_coefficients",
    "coefficients_verbatim",
]


@dataclass(frozen=True)
class ClosedFormMoments:
    """I_-2 = alpha**2 <r^-2>, I_-1 = alpha <r^-1>, I_2 = <r**2>, and F0.

    In ``Mode.PAPER`` the printed F0 can be negative for n >= 2, which makes
    i_2 negative as well; no positivity is enforced here.
    """

    i_m2: float
    i_m1: float
    i_2: float
    f0: float
    mode: Mode
    params: SpectralParams


@dataclass(frozen=True)
class CriterionCoefficients:
    bigB: float
    bigD: float
    r2: float
    bigA: float


def paper_f0(n: int, xi: float) -> float:
    """F0 exactly as printed alongside the I_2 closed form."""
    c1, c2, c3 = 2 * xi + 1, 2 * xi + 2, 2 * xi + 3
    return (
        c1 * c2 * c3
        * (
            1
            + 2 * n / c1
            + 10 * n * (1 - n) / (c1 * c2)
            + 20 * n * (1 - n) * (2 - n) / (c1 * c2 * c3)
        )
    )


def oracle_f0(n: int, xi: float) -> float:
    """F0 implied by exact integration: (2n + 2xi + 1) <rho**2>."""
    return (2 * n + 2 * xi + 1) * rho_moment_oracle(n, xi, 2)


def candidate_rho2(n: int, xi: float) -> float:
    """Conjectured closed form <rho**2> = 10 N**2 - 6 xi**2 + 7/2, N = n + 1/2 + xi."""
    big_n = n + 0.5 + xi
    return 10 * big_n * big_n - 6 * xi * xi + 3.5


def f0_for_mode(n: int, xi: float, mode: Mode) -> float:
    return paper_f0(n, xi) if Mode(mode) is Mode.PAPER else oracle_f0(n, xi)


def _log_prefactor(n: int, xi: float, k: float) -> float:
    # ln[C^2 Gamma(2xi+1)^2 n! / Gamma(2xi+1+n)]
    return log_norm_c2(n, xi, k) + 2 * log_gamma(2 * xi + 1) + log_gamma(n + 1) - log_gamma(2 * xi + 1 + n)


def closed_form_moments(state: StateLabel, config: SystemConfig, mode: Mode = Mode.PAPER) -> ClosedFormMoments:
    """Prefactor forms of I_-2, I_-1 and I_2 with C**2 taken from its Gamma expression."""
    params = bound_mass(state, config)
    n, xi, k, alpha = state.n, params.xi, params.k, config.alpha
    g = math.exp(_log_prefactor(n, xi, k))
    f0 = f0_for_mode(n, xi, mode)
    return ClosedFormMoments(
        i_m2=alpha * alpha * g / (2 * xi) / k,
        i_m1=alpha * g / k**2,
        i_2=g / k**5 * f0,
        f0=f0,
        mode=Mode(mode),
        params=params,
    )


def simplified_moments(state: StateLabel, config: SystemConfig, mode: Mode = Mode.PAPER) -> ClosedFormMoments:
    """Same integrals with the prefactor collapsed: G = k**3 / (2N)."""
    params = bound_mass(state, config)
    n, xi, k, big_n, alpha = state.n, params.xi, params.k, params.bigN, config.alpha
    f0 = f0_for_mode(n, xi, mode)
    return ClosedFormMoments(
        i_m2=alpha * alpha * k * k / (2 * xi * 2 * big_n),
        i_m1=alpha * k / (2 * big_n),
        i_2=f0 / (2 * big_n * k * k),
        f0=f0,
        mode=Mode(mode),
        params=params,
    )


def radial_moments(state: StateLabel, config: SystemConfig, mode: Mode = Mode.PAPER) -> RadialMoments:
    """Closed-form moments repackaged as plain radial expectation values."""
    cf = closed_form_moments(state, config, mode)
    alpha = config.alpha
    inv_r2 = cf.i_m2 / alpha**2
    inv_r = cf.i_m1 / alpha
    return RadialMoments(
        inv_r2=inv_r2,
        inv_r=inv_r,
        r2=cf.i_2,
        p2=kg_p2(cf.params, config, inv_r2, inv_r),
        mode=cf.mode,
    )


def criterion_coefficients(
    moments: Union[ClosedFormMoments, RadialMoments],
    params: SpectralParams,
    config: SystemConfig,
) -> CriterionCoefficients:
    """B = <r^2>/4 + A and D = -2A with A = (M^2 - 4m^2) + I_-2 + 2M I_-1.

    M**2 - 4m**2 enters as -k**2 (identical on shell, no cancellation).
    """
    alpha = config.alpha
    if isinstance(moments, ClosedFormMoments):
        i_m2, i_m1, r2 = moments.i_m2, moments.i_m1, moments.i_2
    else:
        i_m2, i_m1, r2 = alpha**2 * moments.inv_r2, alpha * moments.inv_r, moments.r2
    big_a = -params.k**2 + i_m2 + 2 * params.mass * i_m1
    return CriterionCoefficients(
        bigB=r2 / 4 + big_a,
        bigD=-2 * i_m2 - 4 * params.mass * i_m1 + 2 * params.k**2,
        r2=r2,
        bigA=big_a,
    )


def coefficients_verbatim(state: StateLabel, config: SystemConfig, mode: Mode = Mode.PAPER) -> tuple[float, float]:
    """(B, D) from the explicit prefactor expressions, term for term."""
    params = bound_mass(state, config)
    n, xi, k, mass = state.n, params.xi, params.k, params.mass
    alpha, m = config.alpha, config.m
    g = math.exp(_log_prefactor(n, xi, k))
    f0 = f0_for_mode(n, xi, mode)
    big_b = g * (f0 / (4 * k**5) + alpha**2 / (2 * xi * k) + 2 * mass * alpha / k**2) + (mass**2 - 4 * m**2)
    big_d = -4 * alpha * g * (alpha / (4 * xi * k) + mass / k**2) - 8 * (mass**2 / 4 - m**2)
    return big_b, big_d
