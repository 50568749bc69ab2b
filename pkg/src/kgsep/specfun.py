"""Special-function kernel.

Log-gamma, terminating confluent hypergeometric (Kummer) polynomials,
generalized Laguerre polynomials, the terminating 3F2 appearing in the
Laguerre moment integral, and an exact term-wise moment integrator used as
the reference oracle for every closed-form expectation value in the package.

The bound-state radial density in the scaled coordinate ``rho = k r`` is

    w(rho) = rho**(2 xi + 1) * exp(-rho) * F(-n; 2 xi + 1; rho)**2

so each monomial of the squared polynomial integrates to a Gamma function.
Relative to Gamma(2 xi + 2 + s) every term is a rising factorial, i.e. a
rational function of ``2 xi`` and ``s``. A finite double is an exact
rational, so the oracle sums the terms in exact rational arithmetic and
rounds once at the end; only the leading Gamma ratio for non-integer ``s``
goes through log-gamma.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

__all__ = [
    "DomainError",
    "log_gamma",
    "kummer_coeffs",
    "kummer_terminating",
    "laguerre_general",
    "hyper3f2_terminating",
    "rho_moment_oracle",
    "rho_moment_ratio",
]


class DomainError(ValueError):
    """Argument outside the domain of a special function or formula."""


def log_gamma(x: float) -> float:
    """Return ln Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x!r}")
    return math.lgamma(x)


def kummer_coeffs(n: int, c: float) -> tuple[float, ...]:
    """Coefficients of F(-n; c; x) = sum_j c_j x**j, with c_0 = 1."""
    _check_order(n)
    if not c > 0:
        raise DomainError(f"Kummer denominator parameter must be > 0, got {c!r}")
    coeffs = [1.0]
    for j in range(n):
        coeffs.append(coeffs[-1] * (j - n) / ((c + j) * (j + 1)))
    return tuple(coeffs)


def kummer_terminating(n: int, c: float, x: float) -> float:
    """Evaluate the terminating confluent series F(-n; c; x).

    Horner evaluation of ``sum_{j<=n} (-n)_j / (c)_j * x**j / j!``.
    """
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x!r}")
    value = 0.0
    for cj in reversed(kummer_coeffs(n, c)):
        value = value * x + cj
    return value


def laguerre_general(n: int, s: float, x: float) -> float:
    """Generalized Laguerre polynomial L_n^(s)(x) by upward recurrence."""
    _check_order(n)
    if not s > -1:
        raise DomainError(f"Laguerre order s must be > -1, got {s!r}")
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x!r}")
    prev, cur = 1.0, 1.0 + s - x
    if n == 0:
        return prev
    for j in range(1, n):
        prev, cur = cur, ((2 * j + 1 + s - x) * cur - (j + s) * prev) / (j + 1)
    return cur


def hyper3f2_terminating(k: int, n: int, alpha_param: float) -> float:
    """Terminating 3F2(-k, k+1, -n; 1, alpha_param+1; 1).

    Together with Gamma prefactors this gives the Laguerre moment

        int_0^inf exp(-x) x**(a+k) [L_n^(a)(x)]**2 dx
            = Gamma(a+k+1) Gamma(a+n+1) / (n! Gamma(a+1)) * 3F2(...)

    The series stops at ``min(k, n)``.
    """
    _check_order(k)
    _check_order(n)
    if not alpha_param > -1:
        raise DomainError(f"alpha_param must be > -1, got {alpha_param!r}")
    term = 1.0
    terms = [term]
    for j in range(min(k, n)):
        term *= (j - k) * (k + 1 + j) * (j - n) / ((1 + j) * (alpha_param + 1 + j) * (j + 1))
        terms.append(term)
    return math.fsum(terms)


def rho_moment_oracle(n: int, xi: float, s: float) -> float:
    """Normalized moment <rho**s> of the bound-state radial density.

    Expands the squared Kummer polynomial and integrates every monomial
    against ``rho**(2 xi + 1) exp(-rho)`` exactly. The s = 0 sum is the
    normalization, so ``rho_moment_oracle(n, xi, 0) == 1``.
    """
    _check_oracle_args(n, xi, s)
    if float(s).is_integer():
        return float(_exact_ratio(n, xi, int(s)))
    # Gamma(b+s+i)/Gamma(b) = Gamma(b+s)/Gamma(b) * (b+s)_i; only the prefactor is inexact.
    b = 2.0 * xi + 2.0
    fx = Fraction(xi)
    sums = _pochhammer_sum(n, fx, Fraction(s)) / _pochhammer_sum(n, fx, Fraction(0))
    return math.exp(log_gamma(b + s) - log_gamma(b)) * float(sums)


def rho_moment_ratio(n: int, xi: float, s: int) -> Fraction:
    """Unnormalized integral of ``rho**s w(rho)`` divided by Gamma(2 xi + 2).

    Exact rational value; with ``s = 0`` this is the quantity the
    normalization constant must invert.
    """
    _check_oracle_args(n, xi, s)
    if not float(s).is_integer():
        raise DomainError("rho_moment_ratio supports integer powers only")
    fx = Fraction(xi)
    return _gamma_shift(2 * fx + 2, int(s)) * _pochhammer_sum(n, fx, Fraction(int(s)))


def _check_order(n: int) -> None:
    if n < 0 or int(n) != n:
        raise DomainError(f"polynomial order must be a nonnegative integer, got {n!r}")


def _check_oracle_args(n: int, xi: float, s: float) -> None:
    _check_order(n)
    if not xi > 0:
        raise DomainError(f"xi must be > 0, got {xi!r}")
    if not s + 2 * xi + 2 > 0:
        raise DomainError(f"<rho**{s}> diverges at the origin for xi={xi!r}")


def _square_coeffs(coeffs: Sequence) -> list:
    out = [coeffs[0] * 0] * (2 * len(coeffs) - 1)
    for j, cj in enumerate(coeffs):
        for i, ci in enumerate(coeffs):
            out[i + j] += ci * cj
    return out


def _gamma_shift(b: Fraction, p: int) -> Fraction:
    """Gamma(b + p) / Gamma(b) for integer p."""
    out = Fraction(1)
    if p >= 0:
        for t in range(p):
            out *= b + t
    else:
        for t in range(p, 0):
            out /= b + t
    return out


@lru_cache(maxsize=4096)
def _pochhammer_sum(n: int, xi: Fraction, s: Fraction) -> Fraction:
    """sum_i d_i (2 xi + 2 + s)_i with d_i the coefficients of F(-n; 2xi+1; rho)**2."""
    c = 2 * xi + 1
    coeffs = [Fraction(1)]
    for j in range(n):
        coeffs.append(coeffs[-1] * (j - n) / ((c + j) * (j + 1)))
    base = 2 * xi + 2 + s
    total, rising = Fraction(0), Fraction(1)
    for i, d in enumerate(_square_coeffs(coeffs)):
        total += d * rising
        rising *= base + i
    return total


@lru_cache(maxsize=4096)
def _exact_ratio(n: int, xi: float, s: int) -> Fraction:
    fx = Fraction(xi)
    b = 2 * fx + 2
    return _gamma_shift(b, s) * _pochhammer_sum(n, fx, Fraction(s)) / _pochhammer_sum(n, fx, Fraction(0))
