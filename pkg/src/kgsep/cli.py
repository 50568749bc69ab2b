"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error (critical coupling),
3 verification failure. All numbers are printed with 12 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from contextlib import contextmanager
from typing import Iterator, Optional, Sequence

import numpy as np

from .criteria import a_grid, classify_both, classify_state, criterion_nonrelativistic, criterion_reduced, y_lhs_printed
from .moments import closed_form_moments, f0_for_mode, criterion_coefficients, radial_moments
from .specfun import DomainError
from .spectrum import CriticalCouplingError, StateLabel, SystemConfig, binding_energy, bound_mass, compute_xi
from .verify import run_verification
from .wavefunction import Mode

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3

FIGURES = {
    1: dict(n=3, l=1, alphas=[round(0.05 * i, 10) for i in range(1, 60)]),
    2: dict(n=2, l=0, alphas=[round(0.05 * i, 10) for i in range(1, 20)]),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (float, np.floating)):
        return f"{float(x):.12g}"
    return str(x)


def _jsonable(x):
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (float, np.floating)):
        return float(f"{float(x):.12g}")
    return x


@contextmanager
def _output(path: Optional[str]) -> Iterator:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            yield fh


def _write_records(out, header: Sequence[str], rows: Sequence[Sequence], fmt_name: str) -> None:
    if fmt_name == "json":
        json.dump([{h: _jsonable(v) for h, v in zip(header, row)} for row in rows], out, indent=2)
        out.write("\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])


def _state_args(p: argparse.ArgumentParser, state: bool = True) -> None:
    if state:
        p.add_argument("--n", type=int, required=True, help="radial quantum number")
        p.add_argument("--l", type=int, required=True, help="orbital quantum number")
        p.add_argument("--alpha", type=float, required=True, help="dimensionless coupling")
    p.add_argument("--m", type=float, default=1.0, help="constituent mass (default 1)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output path (default stdout)")


def _mode_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.PAPER.value)


def _a_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a-min", type=float, default=1e-3)
    p.add_argument("--a-max", type=float, default=1e3)
    p.add_argument("--a-steps", type=int, default=2001)


def _state(ns) -> tuple[StateLabel, SystemConfig]:
    return StateLabel(ns.n, ns.l), SystemConfig(ns.alpha, ns.m)


def cmd_spectrum(ns) -> int:
    state, config = _state(ns)
    p = bound_mass(state, config)
    header = ["n", "l", "alpha", "m", "xi", "N", "M", "k", "lambda", "N1", "binding_energy"]
    row = [state.n, state.l, config.alpha, config.m, p.xi, p.bigN, p.mass, p.k, p.lambda_, p.n1, binding_energy(p, config)]
    with _output(ns.out) as out:
        _write_records(out, header, [row], ns.format)
    return EXIT_OK


def cmd_moments(ns) -> int:
    state, config = _state(ns)
    params = bound_mass(state, config)
    header = ["mode", "inv_r2", "inv_r", "r2", "p2", "I_m2", "I_m1", "I_2", "F0", "A", "B", "D", "reduced_a1", "nonrel"]
    rows = []
    for mode in Mode:
        rm = radial_moments(state, config, mode)
        cf = closed_form_moments(state, config, mode)
        co = criterion_coefficients(cf, params, config)
        rows.append([
            mode.value, rm.inv_r2, rm.inv_r, rm.r2, rm.p2, cf.i_m2, cf.i_m1, cf.i_2, cf.f0,
            co.bigA, co.bigB, co.bigD, criterion_reduced(co, 1.0), criterion_nonrelativistic(state, config),
        ])
    if ns.mode is not None:
        rows = [r for r in rows if r[0] == ns.mode]
    with _output(ns.out) as out:
        _write_records(out, header, rows, ns.format)
    return EXIT_OK


def cmd_verify(ns) -> int:
    report = run_verification(ns.n_max, ns.l_max)
    with _output(ns.out) as out:
        if ns.format == "json":
            json.dump(
                {
                    "passed": report.passed,
                    "checks": [
                        {"name": c.name, "tol": c.tol, "max_err": _jsonable(c.max_err), "count": c.count, "passed": c.passed}
                        for c in report.checks
                    ],
                    "f0": [
                        {
                            "n": r.n, "l": r.l, "alpha": _jsonable(r.alpha), "xi": _jsonable(r.xi),
                            "f0_paper": _jsonable(r.f0_paper), "f0_oracle": _jsonable(r.f0_oracle),
                            "rho2_paper": _jsonable(r.rho2_paper), "rho2_oracle": _jsonable(r.rho2_oracle),
                            "status": "MATCH" if r.matches else "DISCREPANT",
                        }
                        for r in report.f0_rows
                    ],
                },
                out,
                indent=2,
            )
            out.write("\n")
        else:
            for c in report.checks:
                out.write(f"{'PASS' if c.passed else 'FAIL'} {c.name}: max_err={fmt(c.max_err)} tol={c.tol:g} n={c.count}\n")
            out.write("\n# F0 audit (alpha=0 rows are the alpha->0 limit)\n")
            rows = [
                [r.n, r.l, r.alpha, r.xi, r.f0_paper, r.f0_oracle, r.rho2_paper, r.rho2_oracle,
                 "MATCH" if r.matches else "DISCREPANT"]
                for r in report.f0_rows
            ]
            _write_records(out, ["n", "l", "alpha", "xi", "f0_paper", "f0_oracle", "rho2_paper", "rho2_oracle", "status"], rows, "csv")
    return EXIT_OK if report.passed else EXIT_VERIFY


def _verdict_record(v) -> dict:
    return {
        "verdict": v.value.value,
        "P": _jsonable(v.p),
        "Q": _jsonable(v.q),
        "witness_a": _jsonable(v.witness_a),
        "necessary_all_a": v.necessary_all_a,
        "separable_excluding_a1": v.separable_excluding_a1,
        "grid_verdict": v.grid_value.value,
        "grid_agrees": v.grid_agrees,
    }


def cmd_classify(ns) -> int:
    state, config = _state(ns)
    grid = a_grid(ns.a_min, ns.a_max, ns.a_steps)
    verdicts = classify_both(state, config, grid)
    chosen = verdicts[Mode(ns.mode)]
    record = {
        "n": state.n, "l": state.l, "alpha": _jsonable(config.alpha), "m": _jsonable(config.m),
        "mode": ns.mode, "verdict": chosen.value.value,
        "modes": {mode.value: _verdict_record(v) for mode, v in verdicts.items()},
    }
    with _output(ns.out) as out:
        if ns.format != "json":
            witness = f" witness_a={fmt(chosen.witness_a)}" if chosen.witness_a is not None else ""
            out.write(f"{chosen.value.value} mode={ns.mode} P={fmt(chosen.p)} Q={fmt(chosen.q)}{witness}\n")
        out.write(json.dumps(record, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_figure(ns) -> int:
    fig = FIGURES[ns.figure_id]
    grid = a_grid(ns.a_min, ns.a_max, ns.a_steps)
    t = grid * grid + 1 / (grid * grid)
    mode = Mode(ns.mode)
    rows = []
    for alpha in fig["alphas"]:
        xi = compute_xi(fig["l"], alpha)
        f0 = f0_for_mode(fig["n"], xi, mode)
        y = y_lhs_printed(grid, fig["n"], xi, alpha, f0)
        for a, yl, yr in zip(grid, y, t):
            rows.append([alpha, a, yl, yr, not yl > yr])
    with _output(ns.out) as out:
        _write_records(out, ["alpha", "a", "y_lhs", "y_rhs", "violated"], rows, ns.format)
    return EXIT_OK


SWEEP_HEADER = [
    "n", "l", "alpha", "skipped", "xi", "N", "M", "k", "inv_r2", "inv_r",
    "r2_paper", "r2_oracle", "p2", "P_paper", "Q_paper", "verdict_paper",
    "P_oracle", "Q_oracle", "verdict_oracle",
]


def _alpha_values(ns) -> list[float]:
    if ns.alpha_steps < 1:
        raise UsageError("--alpha-steps must be >= 1")
    if ns.alpha_scale == "log":
        if ns.alpha_min <= 0:
            raise UsageError("log alpha grid needs --alpha-min > 0")
        values = np.logspace(np.log10(ns.alpha_min), np.log10(ns.alpha_max), ns.alpha_steps)
    else:
        values = np.linspace(ns.alpha_min, ns.alpha_max, ns.alpha_steps)
    return [round(float(v), 12) for v in values]


def sweep_rows(ns) -> list[list]:
    grid = a_grid(ns.a_min, ns.a_max, ns.a_steps)
    modes = list(Mode) if ns.mode is None else [Mode(ns.mode)]
    rows = []
    for n in range(ns.n_min, ns.n_max + 1):
        for l in range(ns.l_min, ns.l_max + 1):
            for alpha in _alpha_values(ns):
                state = StateLabel(n, l)
                try:
                    config = SystemConfig(alpha, ns.m)
                    params = bound_mass(state, config)
                except DomainError:
                    rows.append([n, l, alpha, True] + [""] * (len(SWEEP_HEADER) - 4))
                    continue
                paper = radial_moments(state, config, Mode.PAPER)
                oracle = radial_moments(state, config, Mode.ORACLE)
                cells = {}
                for mode in Mode:
                    if mode in modes:
                        v = classify_state(state, config, mode, grid)
                        cells[mode] = [v.p, v.q, v.value.value]
                    else:
                        cells[mode] = ["", "", ""]
                rows.append(
                    [n, l, alpha, False, params.xi, params.bigN, params.mass, params.k,
                     oracle.inv_r2, oracle.inv_r, paper.r2, oracle.r2, oracle.p2]
                    + cells[Mode.PAPER] + cells[Mode.ORACLE]
                )
    return rows


def cmd_sweep(ns) -> int:
    rows = sweep_rows(ns)
    with _output(ns.out) as out:
        _write_records(out, SWEEP_HEADER, rows, ns.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kgsep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", help="bound-state spectral parameters")
    _state_args(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("moments", help="radial moments and criterion coefficients in both modes")
    _state_args(p)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=None)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("verify", help="closed forms against the term-wise oracle")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--l-max", type=int, default=2)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="separability verdict for one state")
    _state_args(p)
    _mode_arg(p)
    _a_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("figure", help="Y_LHS / Y_RHS data for figure 1 or 2")
    p.add_argument("figure_id", type=int, choices=sorted(FIGURES))
    _mode_arg(p)
    _a_args(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("sweep", help="verdicts over an (n, l, alpha) grid")
    _state_args(p, state=False)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=None, help="restrict to one mode (default both)")
    p.add_argument("--n-min", type=int, default=0)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--l-min", type=int, default=0)
    p.add_argument("--l-max", type=int, default=3)
    p.add_argument("--alpha-min", type=float, default=0.05)
    p.add_argument("--alpha-max", type=float, default=3.0)
    p.add_argument("--alpha-steps", type=int, default=60)
    p.add_argument("--alpha-scale", choices=("linear", "log"), default="linear")
    _a_args(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except CriticalCouplingError as exc:
        print(f"kgsep: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DomainError as exc:
        print(f"kgsep: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except UsageError as exc:
        print(f"kgsep: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # Downstream closed early (e.g. `| head`); silence the flush at exit.
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
