"""Continuous-variable separability criteria for the two-meson bound state.

The EPR-type operators are u = a r1 + r2/a and v = a p1 - p2/a. Every
a-dependent quantity depends on a only through t = a**2 + 1/a**2 >= 2.

The general criterion is affine in t, ``Y_LHS = P t + Q``, so "violated for
every a > 0" reduces to a sign check of ``(P - 1) t + Q`` on ``[2, inf)``.
A log-spaced scan over a is run alongside as a cross-check.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .moments import (
    CriterionCoefficients,
    Mode,
    f0_for_mode,
    radial_moments,
)
from .specfun import DomainError
from .spectrum import StateLabel, SystemConfig, bound_mass, compute_xi
from .wavefunction import RadialMoments

__all__ = [
    "BOUNDARY_TOL",
    "DEFAULT_A_GRID",
    "EprParameter",
    "CriterionReport",
    "VerdictValue",
    "Verdict",
    "total_variance",
    "duan_sufficient_check",
    "duan_necessary_check",
    "criterion_reduced",
    "criterion_relativistic_asymptotic",
    "criterion_nonrelativistic",
    "nonrelativistic_lower_bound",
    "y_lhs_printed",
    "y_coefficients",
    "y_general",
    "a_grid",
    "classify_state",
    "classify_both",
]

BOUNDARY_TOL = 1e-9
DEFAULT_A_GRID = (1e-3, 1e3, 2001)


@dataclass(frozen=True)
class EprParameter:
    a: float

    def __post_init__(self) -> None:
        _check_a(self.a)

    @property
    def t(self) -> float:
        return self.a**2 + 1 / self.a**2


@dataclass(frozen=True)
class CriterionReport:
    """General criterion evaluated at one value of a.

    ``necessary_satisfied`` tests Y_LHS (the total variance implied by the
    closed forms) against |a**2 - 1/a**2|.
    """

    a: float
    y_lhs: float
    y_rhs: float
    sufficient_satisfied: bool
    necessary_satisfied: bool
    mode: Mode
    total_variance_first_principles: Optional[float] = None


class VerdictValue(str, enum.Enum):
    SEPARABLE = "Separable"
    ENTANGLED = "Entangled"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class Verdict:
    """Classification of one state in one mode.

    Attributes:
        value: analytic verdict over all a > 0.
        p, q: affine coefficients, Y_LHS = p t + q.
        witness_a: for Entangled, the scanned a with the largest margin in
            the necessary bound; otherwise None.
        necessary_all_a: necessary bound held at every scanned a.
        separable_excluding_a1: criterion holds for every t > 2 (a != 1).
        grid_value: verdict from the log-spaced scan alone.
    """

    value: VerdictValue
    mode: Mode
    p: float
    q: float
    witness_a: Optional[float]
    necessary_all_a: bool
    separable_excluding_a1: bool
    grid_value: VerdictValue

    @property
    def grid_agrees(self) -> bool:
        return self.grid_value is self.value


def _check_a(a: float) -> None:
    if not a > 0:
        raise DomainError(f"a must be > 0, got {a!r}")


def _t(a):
    return a * a + 1.0 / (a * a)


def total_variance(moments: RadialMoments, a: float) -> float:
    """<(du)^2> + <(dv)^2> from the equal-mass centre-of-mass reduction.

    With r1 = r/2, r2 = -r/2 and p1 = -p2 = p the coordinate part carries
    (a - 1/a)**2 <r**2>/4 and the momentum part (a + 1/a)**2 <p**2>.
    """
    _check_a(a)
    return (a - 1 / a) ** 2 * moments.r2 / 4 + (a + 1 / a) ** 2 * moments.p2


def duan_sufficient_check(tv: float, a: float) -> bool:
    _check_a(a)
    return tv >= _t(a)


def duan_necessary_check(tv: float, a: float) -> bool:
    _check_a(a)
    return tv >= abs(a * a - 1 / (a * a))


def criterion_reduced(coeffs: CriterionCoefficients, a: float) -> float:
    """LHS - RHS of t B - <r^2>/2 + D > t; equals -2 at a = 1."""
    _check_a(a)
    t = _t(a)
    return math.fsum([t * coeffs.bigB, -coeffs.r2 / 2, coeffs.bigD, -t])


def criterion_relativistic_asymptotic(state: StateLabel, config: SystemConfig, f0: float) -> float:
    """Large/small-a separability criterion; positive means it holds."""
    params = bound_mass(state, config)
    alpha, m, xi, big_n = config.alpha, config.m, params.xi, params.bigN
    kk = m**2 * alpha**2 / (big_n**2 + alpha**2 / 4)
    return (
        alpha / big_n * kk * (alpha / (4 * xi) + 2 * big_n / alpha)
        - kk
        + 1 / (8 * big_n) * (big_n**2 + alpha**2 / 4) / (m**2 * alpha**2) * f0
        - 1
    )


def _nr_bracket(state: StateLabel) -> int:
    n1 = state.n + state.l + 1
    return 5 * n1 * n1 + 1 - 3 * state.l * (state.l + 1)


def criterion_nonrelativistic(state: StateLabel, config: SystemConfig) -> float:
    """Non-relativistic large/small-a criterion with N1 = n + l + 1."""
    alpha, m = config.alpha, config.m
    n1 = state.n + state.l + 1
    return m**2 * alpha**2 / n1**2 + n1**2 / (2 * m**2 * alpha**2) * _nr_bracket(state) - 1


def nonrelativistic_lower_bound(state: StateLabel) -> float:
    """AM-GM floor sqrt(2 K) - 1 of the non-relativistic criterion, K the bracket."""
    return math.sqrt(2 * _nr_bracket(state)) - 1


def y_coefficients(n: int, xi: float, alpha: float, f0: float) -> tuple[float, float]:
    """(P, Q) with Y_LHS = P (a^2 + 1/a^2) + Q, in units m = 1."""
    big_n = n + 0.5 + xi
    two_n = 2 * n + 2 * xi + 1
    s = 4 * big_n**2 + alpha**2
    g = 4 * alpha**2 / s
    p = 1 / two_n * g * (f0 / 4 * s**2 / (16 * alpha**4) + alpha**2 / (2 * xi) + 4 * big_n) - g
    q = (
        -s / (8 * alpha**2) * f0 / two_n
        - 4 * alpha / two_n * g * (alpha / (4 * xi) + 2 * big_n / alpha)
        + 32 * alpha**2 / s
    )
    return p, q


def y_lhs_printed(a, n: int, xi: float, alpha: float, f0: float):
    """Y_LHS of the general criterion exactly as printed; ``a`` may be an array."""
    big_n = n + 0.5 + xi
    s = 4 * big_n**2 + alpha**2
    return (a**2 + 1 / a**2) * (
        1 / (2 * n + 2 * xi + 1) * 4 * alpha**2 / s
        * (f0 / 4 * s**2 / (16 * alpha**4) + alpha**2 / (2 * xi) + 4 * big_n)
        - 4 * alpha**2 / s
    ) - s / (8 * alpha**2) * f0 / (2 * n + 2 * xi + 1) - 4 * alpha / (2 * n + 2 * xi + 1) * 4 * alpha**2 / s * (
        alpha / (4 * xi) + 2 * big_n / alpha
    ) + 32 * alpha**2 / s


def y_general(state: StateLabel, config: SystemConfig, a: float, mode: Mode = Mode.PAPER) -> CriterionReport:
    _check_a(a)
    xi = compute_xi(state.l, config.alpha)
    y = float(y_lhs_printed(a, state.n, xi, config.alpha, f0_for_mode(state.n, xi, mode)))
    rhs = _t(a)
    return CriterionReport(
        a=a,
        y_lhs=y,
        y_rhs=rhs,
        sufficient_satisfied=y > rhs,
        necessary_satisfied=duan_necessary_check(y, a),
        mode=Mode(mode),
        total_variance_first_principles=total_variance(radial_moments(state, config, mode), a),
    )


def _analytic_value(p: float, q: float, tol: float) -> VerdictValue:
    slope = p - 1
    at_two = 2 * slope + q
    if abs(at_two) < tol:
        return VerdictValue.INDETERMINATE
    if slope <= 0 and at_two < 0:
        return VerdictValue.ENTANGLED
    if slope >= 0 and at_two > 0:
        return VerdictValue.SEPARABLE
    return VerdictValue.INDETERMINATE


def _grid_value(diff: np.ndarray, necessary: np.ndarray, tol: float) -> VerdictValue:
    if np.all(diff < -tol):
        return VerdictValue.ENTANGLED if necessary.any() else VerdictValue.INDETERMINATE
    if np.all(diff > tol):
        return VerdictValue.SEPARABLE
    return VerdictValue.INDETERMINATE


def a_grid(a_min: float = DEFAULT_A_GRID[0], a_max: float = DEFAULT_A_GRID[1], steps: int = DEFAULT_A_GRID[2]) -> np.ndarray:
    _check_a(a_min)
    _check_a(a_max)
    if steps < 1:
        raise DomainError("a-grid needs at least one point")
    return np.logspace(math.log10(a_min), math.log10(a_max), steps)


def classify_state(
    state: StateLabel,
    config: SystemConfig,
    mode: Mode = Mode.PAPER,
    grid: Optional[np.ndarray] = None,
    tol: float = BOUNDARY_TOL,
) -> Verdict:
    """Separable / Entangled / Indeterminate over all a > 0.

    Entangled needs the criterion violated for every a and the necessary
    bound satisfied at some scanned a (reported as ``witness_a``). Whether it
    also held at every scanned a is kept in ``necessary_all_a``.
    """
    xi = compute_xi(state.l, config.alpha)
    f0 = f0_for_mode(state.n, xi, mode)
    p, q = y_coefficients(state.n, xi, config.alpha, f0)
    a = a_grid() if grid is None else np.asarray(grid, dtype=float)
    y = y_lhs_printed(a, state.n, xi, config.alpha, f0)
    t = _t(a)
    necessary_margin = y - np.abs(a * a - 1 / (a * a))
    necessary = necessary_margin >= 0

    value = _analytic_value(p, q, tol)
    witness = None
    if value is VerdictValue.ENTANGLED:
        if necessary.any():
            witness = float(a[int(np.argmax(necessary_margin))])
        else:
            value = VerdictValue.INDETERMINATE
    return Verdict(
        value=value,
        mode=Mode(mode),
        p=p,
        q=q,
        witness_a=witness,
        necessary_all_a=bool(necessary.all()),
        separable_excluding_a1=(p - 1 >= 0 and 2 * (p - 1) + q >= -tol),
        grid_value=_grid_value(y - t, necessary, tol),
    )


def classify_both(state: StateLabel, config: SystemConfig, grid: Optional[np.ndarray] = None) -> dict[Mode, Verdict]:
    return {mode: classify_state(state, config, mode, grid) for mode in Mode}
