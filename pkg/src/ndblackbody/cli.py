"""
Command-line front end.

Usage:
    ndblackbody spectrum -D 3 -T 5000 --nu-min 1e13 --nu-max 1e15 --points 50 --format csv
    ndblackbody wien -D 3 -T 300
    ndblackbody sb -D 4 --format json
    ndblackbody modes -D 2 --edges 1,1 --radius 200
    ndblackbody check

Payloads go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 domain or runtime failure, 2 usage error. Floats are printed with the
shortest representation that round-trips, so output is byte-stable.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import cavity_modes, checks, radiometry, spectrum, wien
from .constants import NATURAL, SI
from .errors import (
    ConvergenceError,
    DomainError,
    EnumerationBudgetError,
    NoSignChangeError,
    RangeError,
)
from .numerics import RealTolerance

__all__ = ["main", "run", "CommandResult"]

FORMATS = ("plain", "csv", "json")
_RUNTIME_ERRORS = (DomainError, RangeError, EnumerationBudgetError, ConvergenceError, NoSignChangeError)


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    payload: str
    diagnostics: str = ""


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _fmt(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _render_records(fields, rows, fmt, json_object):
    if fmt == "json":
        return json.dumps(json_object, indent=2) + "\n"
    out = io.StringIO()
    if fmt == "csv":
        out.write(",".join(fields) + "\n")
        for row in rows:
            out.write(",".join(_fmt(row[f]) for f in fields) + "\n")
    elif len(rows) == 1:
        width = max(len(f) for f in fields)
        for f in fields:
            out.write(f"{f:<{width}}  {_fmt(rows[0][f])}\n")
    else:
        out.write(" ".join(fields) + "\n")
        for row in rows:
            out.write(" ".join(_fmt(row[f]) for f in fields) + "\n")
    return out.getvalue()


# ---------------------------------------------------------------------------
# argument types
# ---------------------------------------------------------------------------

def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not (value > 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"must be a finite positive number, got {text!r}")
    return value


def _positive_fraction(text):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text!r}")
    return value


def _length_list(text):
    return tuple(_positive_fraction(t.strip()) for t in text.split(","))


def _compact_list(text):
    return tuple(None if t.strip() in ("-", "") else _positive_fraction(t.strip()) for t in text.split(","))


def _relative_tolerance(text):
    value = _positive_float(text)
    if value >= 1.0:
        raise argparse.ArgumentTypeError(f"relative tolerance must be < 1, got {text!r}")
    return value


def _build_parser():
    # global flags are accepted before or after the subcommand
    def add_globals(p, suppress):
        default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        p.add_argument("--format", choices=FORMATS, default=default("plain"), help="output format")
        p.add_argument(
            "--natural-units", action="store_true", default=default(False), help="use h = k = c = 1"
        )
        p.add_argument(
            "--tolerance",
            type=_relative_tolerance,
            default=default(1e-15),
            metavar="REL",
            help="relative tolerance for root finding",
        )

    parser = _Parser(prog="ndblackbody", description="Blackbody radiation in D spatial dimensions.")
    add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", help="tabulate the spectral energy density")
    p.add_argument("-D", "--dimension", type=int, required=True)
    p.add_argument("-T", "--temperature", type=_positive_float, required=True)
    p.add_argument("--nu-min", type=_positive_float, required=True)
    p.add_argument("--nu-max", type=_positive_float, required=True)
    p.add_argument("--points", type=int, default=50)
    add_globals(p, suppress=True)

    p = sub.add_parser("wien", help="Wien peak z_D and, given -T, the peak frequency")
    p.add_argument("-D", "--dimension", type=int, required=True)
    p.add_argument("-T", "--temperature", type=_positive_float)
    add_globals(p, suppress=True)

    p = sub.add_parser("sb", help="energy-density and Stefan-Boltzmann constants")
    p.add_argument("-D", "--dimension", type=int, required=True)
    add_globals(p, suppress=True)

    p = sub.add_parser("modes", help="exact vs continuum cavity mode count")
    p.add_argument("-D", "--dimension", type=int, required=True)
    p.add_argument("--edges", type=_length_list, required=True, help="comma-separated edge lengths")
    p.add_argument("--compact", type=_compact_list, help="compact sizes per axis, '-' for non-compact")
    cut = p.add_mutually_exclusive_group(required=True)
    cut.add_argument("--cutoff", type=_positive_fraction, help="frequency cutoff in Hz")
    cut.add_argument("--radius", type=_positive_fraction, help="dimensionless radius 2 nu / c")
    p.add_argument("--budget", type=int, default=cavity_modes.DEFAULT_BUDGET)
    add_globals(p, suppress=True)

    p = sub.add_parser("check", help="run the embedded oracle suite (SI units)")
    add_globals(p, suppress=True)
    return parser


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_spectrum(args, constants, tol):
    d, t = args.dimension, args.temperature
    lo, hi, n = math.log(args.nu_min), math.log(args.nu_max), args.points
    notes = []
    rows = []
    for i in range(n):
        if i == 0:
            nu = args.nu_min
        elif i == n - 1:
            nu = args.nu_max
        else:
            nu = math.exp(lo + (hi - lo) * i / (n - 1))
        query = spectrum.SpectrumQuery(d, t, nu)
        try:
            value = spectrum.spectral_energy_density(query, constants)
            rho, z = value.value, value.dimensionless_z
        except RangeError as exc:
            if exc.log_value > 0:
                raise
            # deep Wien tail: report the underflowed value, keep the table going
            rho = math.exp(exc.log_value)
            z = constants.planck_h * nu / (constants.boltzmann_k * t)
            notes.append(f"nu={nu!r}: density outside double range, ln(rho)={exc.log_value!r}")
        rows.append({"nu_hz": nu, "z": z, "rho_si": rho})
    fields = ("nu_hz", "z", "rho_si")
    obj = {"dimension": d, "temperature_k": t, "rows": rows}
    return _render_records(fields, rows, args.format, obj), notes


def cmd_wien(args, constants, tol):
    if args.temperature is None:
        sol = wien.solve_wien(args.dimension, tol)
        row = {"dimension": sol.dimension, "z_peak": sol.z_peak}
    else:
        sol = wien.peak_frequency(args.dimension, args.temperature, constants, tol)
        row = {
            "dimension": sol.dimension,
            "z_peak": sol.z_peak,
            "temperature_k": sol.temperature,
            "nu_max_hz": sol.peak_frequency,
        }
    return _render_records(tuple(row), [row], args.format, row), []


def cmd_sb(args, constants, tol):
    rc = radiometry.radiation_constants(args.dimension, constants)
    row = {
        "dimension": rc.dimension,
        "a_D": rc.a_D,
        "sigma_D": rc.sigma_D,
        "f_D": rc.geometric_factor_f_D,
        "log_a_D": rc.log_a_D,
        "log_sigma_D": rc.log_sigma_D,
    }
    return _render_records(tuple(row), [row], args.format, row), []


def cmd_modes(args, constants, tol):
    geometry = cavity_modes.CavityGeometry(args.edges, args.compact)
    fit = cavity_modes.validate_compact_fit(geometry)
    if not fit.valid:
        axes = ", ".join(str(i) for i in fit.violations)
        raise DomainError(f"compact-fit violation: edge exceeds compact size at index {axes}")
    if args.radius is not None:
        cutoff = cavity_modes.cutoff_for_radius(args.radius, constants)
    else:
        cutoff = args.cutoff
    report = cavity_modes.mode_count_report(geometry, cutoff, constants, budget=args.budget)
    row = {
        "dimension": report.dimension,
        "frequency_cutoff_hz": report.frequency_cutoff,
        "radius": float(2 * Fraction(cutoff) / Fraction(constants.light_speed_c)),
        "exact_count": report.exact_count,
        "continuum_estimate": report.continuum_estimate,
        "relative_error": report.relative_error,
    }
    return _render_records(tuple(row), [row], args.format, row), []


def cmd_check(args, constants, tol):
    results = checks.run_checks()
    rows = [
        {"name": r.name, "pass": r.passed, "discrepancy": r.discrepancy, "tolerance": r.tolerance}
        for r in results
    ]
    if args.format == "json":
        obj = {"checks": [{k: r[k] for k in ("name", "pass", "discrepancy")} for r in rows]}
        payload = json.dumps(obj, indent=2) + "\n"
    elif args.format == "csv":
        payload = _render_records(("name", "pass", "discrepancy", "tolerance"), rows, "csv", None)
    else:
        width = max(len(r["name"]) for r in rows)
        payload = "".join(
            f"{'pass' if r['pass'] else 'FAIL'}  {r['name']:<{width}}  "
            f"discrepancy={_fmt(r['discrepancy'])}  tolerance={_fmt(r['tolerance'])}\n"
            for r in rows
        )
    failed = [r.name for r in results if not r.passed]
    notes = [f"{len(failed)} check(s) failed: {', '.join(failed)}"] if failed else []
    return payload, notes, (1 if failed else 0)


_COMMANDS = {
    "spectrum": cmd_spectrum,
    "wien": cmd_wien,
    "sb": cmd_sb,
    "modes": cmd_modes,
    "check": cmd_check,
}


def _validate(args, parser):
    if args.command == "spectrum":
        if args.points < 2:
            parser.error(f"--points must be >= 2, got {args.points}")
        if not args.nu_min < args.nu_max:
            parser.error("--nu-min must be smaller than --nu-max")
    if args.command == "modes":
        if len(args.edges) != args.dimension:
            parser.error(f"--edges has {len(args.edges)} entries but -D is {args.dimension}")
        if args.compact is not None and len(args.compact) != args.dimension:
            parser.error(f"--compact has {len(args.compact)} entries but -D is {args.dimension}")
        if args.budget < 1:
            parser.error("--budget must be positive")


def _join_compact(argv):
    # "-,-,1" starts with a dash, which argparse would read as an option
    out = []
    it = iter(argv)
    for token in it:
        if token == "--compact":
            value = next(it, None)
            out.append(token if value is None else f"--compact={value}")
        else:
            out.append(token)
    return out


def run(argv=None) -> CommandResult:
    """Parse ``argv`` and execute one command without touching real stdio."""
    parser = _build_parser()
    argv = _join_compact(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
        _validate(args, parser)
    except _UsageError as exc:
        return CommandResult(2, "", str(exc))
    except SystemExit as exc:
        # --help
        return CommandResult(int(exc.code or 0), "", "")

    constants = NATURAL if args.natural_units else SI
    tol = RealTolerance(relative=args.tolerance)
    try:
        outcome = _COMMANDS[args.command](args, constants, tol)
    except _RUNTIME_ERRORS as exc:
        return CommandResult(1, "", f"ndblackbody {args.command}: {exc}\n")
    payload, notes = outcome[0], outcome[1]
    code = outcome[2] if len(outcome) > 2 else 0
    return CommandResult(code, payload, "".join(n + "\n" for n in notes))


def main(argv=None) -> int:
    result = run(argv)
    if result.payload:
        sys.stdout.write(result.payload)
        sys.stdout.flush()
    if result.diagnostics:
        sys.stderr.write(result.diagnostics)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
