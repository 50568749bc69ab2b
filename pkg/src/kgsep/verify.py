"""Closed-form versus term-wise oracle verification suite."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .moments import candidate_rho2, closed_form_moments, paper_f0, simplified_moments
from .specfun import rho_moment_oracle
from .spectrum import StateLabel, SystemConfig
from .wavefunction import Mode, build_state, normalization_integral

__all__ = ["CheckResult", "F0Row", "VerificationReport", "default_alphas", "iter_states", "run_verification"]

ORACLE_TOL = 1e-10
SIMPLIFIED_TOL = 1e-12


@dataclass
class CheckResult:
    name: str
    tol: float
    max_err: float = 0.0
    count: int = 0
    worst: Optional[tuple] = None

    def update(self, err: float, where: tuple) -> None:
        self.count += 1
        if not err <= self.max_err:
            self.max_err = err
            self.worst = where

    @property
    def passed(self) -> bool:
        return self.count > 0 and self.max_err <= self.tol


@dataclass(frozen=True)
class F0Row:
    n: int
    l: int
    alpha: float
    xi: float
    f0_paper: float
    f0_oracle: float

    @property
    def rho2_paper(self) -> float:
        return self.f0_paper / (2 * self.n + 2 * self.xi + 1)

    @property
    def rho2_oracle(self) -> float:
        return self.f0_oracle / (2 * self.n + 2 * self.xi + 1)

    @property
    def matches(self) -> bool:
        return _rel(self.f0_paper, self.f0_oracle) <= ORACLE_TOL


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)
    f0_rows: list[F0Row] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _rel(x: float, ref: float) -> float:
    return abs(x - ref) / abs(ref) if ref else abs(x)


def default_alphas(l: int, start: float = 0.1, step: float = 0.2, cap: float = 3.0) -> list[float]:
    """Couplings start, start+step, ... up to min(2l + 0.9, cap)."""
    top = min(2 * l + 0.9, cap)
    count = int(math.floor((top - start) / step + 1e-9)) + 1
    return [round(start + i * step, 10) for i in range(max(count, 0))]


def iter_states(n_max: int, l_max: int, alphas=default_alphas) -> Iterator[tuple[StateLabel, SystemConfig]]:
    for n in range(n_max + 1):
        for l in range(l_max + 1):
            for alpha in alphas(l):
                yield StateLabel(n, l), SystemConfig(alpha)


def run_verification(n_max: int = 4, l_max: int = 2, states: Optional[Iterable] = None) -> VerificationReport:
    i_m1 = CheckResult("I_-1 closed form vs oracle", ORACLE_TOL)
    i_m2 = CheckResult("I_-2 closed form vs oracle", ORACLE_TOL)
    norm = CheckResult("normalization C^2", ORACLE_TOL)
    simp = CheckResult("simplified vs prefactor forms", SIMPLIFIED_TOL)
    cand = CheckResult("<rho^2> = 10N^2 - 6xi^2 + 7/2", ORACLE_TOL)
    f0_ground = CheckResult("F0 printed vs oracle at n=0", ORACLE_TOL)
    report = VerificationReport(checks=[i_m1, i_m2, norm, simp, cand, f0_ground])

    seen_limits = set()
    for state, config in states if states is not None else iter_states(n_max, l_max):
        n, l, alpha = state.n, state.l, config.alpha
        where = (n, l, alpha)
        rs = build_state(state, config)
        xi, k = rs.params.xi, rs.params.k
        cf = closed_form_moments(state, config, Mode.ORACLE)
        sf = simplified_moments(state, config, Mode.ORACLE)
        i_m1.update(_rel(cf.i_m1, alpha * k * rho_moment_oracle(n, xi, -1)), where)
        i_m2.update(_rel(cf.i_m2, alpha**2 * k * k * rho_moment_oracle(n, xi, -2)), where)
        norm.update(abs(normalization_integral(rs) - 1), where)
        simp.update(max(_rel(sf.i_m1, cf.i_m1), _rel(sf.i_m2, cf.i_m2), _rel(sf.i_2, cf.i_2)), where)
        rho2 = rho_moment_oracle(n, xi, 2)
        cand.update(_rel(candidate_rho2(n, xi), rho2), where)
        row = F0Row(n, l, alpha, xi, paper_f0(n, xi), cf.f0)
        if n == 0:
            f0_ground.update(_rel(row.f0_paper, row.f0_oracle), where)
        if (n, l) not in seen_limits:
            # alpha -> 0 row: xi -> l + 1/2, F0 depends on (n, xi) only.
            seen_limits.add((n, l))
            xi0 = l + 0.5
            report.f0_rows.append(F0Row(n, l, 0.0, xi0, paper_f0(n, xi0), (2 * n + 2 * xi0 + 1) * rho_moment_oracle(n, xi0, 2)))
        report.f0_rows.append(row)
    return report
