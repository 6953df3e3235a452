"""
Generalized Wien displacement.

Setting the frequency derivative of the D-dimensional spectral density to
zero gives e^z = D / (D - z) with z = h nu / k T. Its non-trivial root z_D
fixes the peak: nu_max = z_D k T / h.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .constants import SI, PhysicalConstants
from .errors import DomainError
from .numerics import DEFAULT_TOLERANCE, Bracket, RealTolerance, solve_bracketed

__all__ = ["WienSolution", "solve_wien", "peak_frequency", "wien_residual"]


@dataclass(frozen=True)
class WienSolution:
    dimension: int
    z_peak: float
    peak_frequency: Optional[float] = None
    temperature: Optional[float] = None


def wien_residual(dimension, z):
    """e^z (D - z) - D; zero at the peak."""
    return math.exp(z) * (dimension - z) - dimension


def solve_wien(dimension: int, tol: RealTolerance = DEFAULT_TOLERANCE) -> WienSolution:
    d = dimension
    if int(d) != d or d < 2:
        raise DomainError(
            f"Wien peak needs an integer dimension >= 2, got {d!r}: "
            "the (D-1) polarization factor makes the spectrum vanish identically at D = 1"
        )
    d = int(d)

    # e^-z times the residual, i.e. the fixed-point form D (1 - e^-z) - z.
    # Same roots, but bounded, so the bracket reaches up to z = D for any D.
    def g(z):
        return -d * math.expm1(-z) - z

    def g_prime(z):
        return d * math.exp(-z) - 1.0

    lo = 1e-9 * d
    z = solve_bracketed(
        g, Bracket(lo, float(d)), tol, fprime=g_prime, x0=d * -math.expm1(-d)
    )
    return WienSolution(dimension=d, z_peak=z)


def peak_frequency(
    dimension: int,
    temperature: float,
    constants: PhysicalConstants = SI,
    tol: RealTolerance = DEFAULT_TOLERANCE,
) -> WienSolution:
    """Frequency (Hz) at which the spectral density peaks at ``temperature``."""
    if not temperature > 0 or not math.isfinite(temperature):
        raise DomainError(f"temperature must be > 0, got {temperature!r}")
    sol = solve_wien(dimension, tol)
    nu = sol.z_peak * (constants.boltzmann_k / constants.planck_h) * temperature
    return WienSolution(sol.dimension, sol.z_peak, nu, temperature)
