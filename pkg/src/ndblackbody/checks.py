"""
Self-contained oracle suite run by the ``check`` command.

Each check pits a library result against an independently coded reference
(plain bisection, the textbook 3D formulas, quadrature, brute-force lattice
loops) and records the measured discrepancy next to its tolerance.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import cavity_modes, radiometry, spectrum, wien
from .constants import NATURAL, SI

__all__ = ["CheckResult", "run_checks"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    discrepancy: float
    tolerance: float


def _rel(value, reference):
    return abs(value - reference) / abs(reference)


def _bisect_wien(d):
    lo, hi = 0.5, float(d)
    f = wien.wien_residual
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if (f(d, mid) > 0) == (f(d, lo) > 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _brute_force_modes(edges, radius):
    """(D-1) * #{n >= 1 : sum (n_i/l_i)^2 <= radius^2} over the full bounding box."""
    edges = [Fraction(e) for e in edges]
    r2 = Fraction(radius) ** 2
    ranges = [range(1, math.floor(e * Fraction(radius)) + 1) for e in edges]
    hits = sum(
        1 for n in itertools.product(*ranges) if sum(Fraction(k) ** 2 / e**2 for k, e in zip(n, edges)) <= r2
    )
    return (len(edges) - 1) * hits


def _wien_checks():
    for d in (2, 3, 4):
        z = wien.solve_wien(d).z_peak
        yield f"wien_root_D{d}", _rel(z, _bisect_wien(d)), 1e-9


def _stefan_boltzmann_checks():
    h, k, c = SI.planck_h, SI.boltzmann_k, SI.light_speed_c
    rc = radiometry.radiation_constants(3, SI)
    textbook = 2.0 * math.pi**5 * k**4 / (15.0 * c**2 * h**3)
    yield "sigma3_textbook", _rel(rc.sigma_D, textbook), 1e-12
    # CODATA quotes the exact value to 10 significant figures
    yield "sigma3_codata", _rel(rc.sigma_D, 5.670374419e-8), 1e-9
    yield "a3_equals_4sigma3_over_c", _rel(rc.a_D, 4.0 * rc.sigma_D / c), 1e-12


def _quadrature_checks():
    for d in range(2, 11):
        worst = max(radiometry.verify_density_by_quadrature(d, t, SI) for t in (1.0, 300.0, 5000.0))
        yield f"quadrature_D{d}", worst, 1e-9


def _consistency_checks():
    worst = 0.0
    for d in range(2, 31):
        rc = radiometry.radiation_constants(d, SI)
        f = d * 2.0 ** (d - 2) * math.gamma(0.5 * d) ** 2 / (math.pi * math.gamma(d + 1.0))
        worst = max(worst, _rel(rc.sigma_D, f * SI.light_speed_c * rc.a_D))
    yield "sigma_equals_f_c_a_D2_to_D30", worst, 1e-12
    yield "f2_is_one_over_pi", _rel(radiometry.geometric_factor(2), 1.0 / math.pi), 1e-14
    yield "f3_is_one_quarter", _rel(radiometry.geometric_factor(3), 0.25), 1e-14


def _planck_3d_check():
    h, k, c = SI.planck_h, SI.boltzmann_k, SI.light_speed_c
    rng = random.Random(20240315)
    worst = 0.0
    for _ in range(20):
        t = 10.0 ** rng.uniform(0.0, 4.0)
        nu = (k * t / h) * rng.uniform(0.05, 20.0)
        planck = 8.0 * math.pi * h * nu**3 / c**3 / math.expm1(h * nu / (k * t))
        got = spectrum.spectral_energy_density(spectrum.SpectrumQuery(3, t, nu), SI).value
        worst = max(worst, _rel(got, planck))
    yield "planck_3d_reduction", worst, 1e-14


def _mode_fixture_checks():
    for edges, radius, expected in (((1, 1), 5, 15), ((1, 1, 1), 2, 2)):
        geometry = cavity_modes.CavityGeometry(edges)
        cutoff = cavity_modes.cutoff_for_radius(radius, NATURAL)
        got = cavity_modes.count_modes_exact(geometry, cutoff, NATURAL)
        brute = _brute_force_modes(edges, radius)
        tag = f"modes_D{len(edges)}_r{radius}"
        yield tag, float(max(abs(got - expected), abs(got - brute))), 0.0


def run_checks() -> list[CheckResult]:
    results = []
    for group in (
        _wien_checks,
        _stefan_boltzmann_checks,
        _quadrature_checks,
        _consistency_checks,
        _planck_3d_check,
        _mode_fixture_checks,
    ):
        for name, discrepancy, tolerance in group():
            ok = math.isfinite(discrepancy) and discrepancy <= tolerance
            results.append(CheckResult(name, ok, discrepancy, tolerance))
    return results
