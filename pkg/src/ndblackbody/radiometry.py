"""
Total energy density and generalized Stefan-Boltzmann law.

    rho_T = a_D T^(D+1)
    a_D   = 2 (D-1) k^(D+1) / Gamma(D/2) * (sqrt(pi) / (c h))^D * zeta(D+1) Gamma(D+1)

    R_T     = sigma_D T^(D+1)
    sigma_D = D (D-1) c k / (2 pi) * (2 sqrt(pi) k / (c h))^D * Gamma(D/2) zeta(D+1)

The two are linked by sigma_D = f_D c a_D with

    f_D = D 2^(D-2) Gamma(D/2)^2 / (pi Gamma(D+1))
        = Gamma(D/2) / (2 sqrt(pi) Gamma((D+1)/2)),

the fraction of the isotropic energy flux crossing a unit (D-1)-dimensional
surface element; f_2 = 1/pi, f_3 = 1/4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import SI, PhysicalConstants
from .errors import DomainError, RangeError
from .numerics import bose_integral, log_gamma, riemann_zeta
from .spectrum import _check_dimension

__all__ = [
    "RadiationConstants",
    "radiation_constants",
    "geometric_factor",
    "total_energy_density",
    "total_radiance",
    "verify_density_by_quadrature",
]

_LOG_PI = math.log(math.pi)
_LOG_2 = math.log(2.0)


@dataclass(frozen=True)
class RadiationConstants:
    dimension: int
    a_D: float
    sigma_D: float
    log_a_D: float
    log_sigma_D: float
    geometric_factor_f_D: float


def _exp_checked(log_value, what):
    try:
        value = math.exp(log_value)
    except OverflowError:
        value = math.inf
    if value == 0.0 or math.isinf(value):
        raise RangeError(f"{what} = exp({log_value:.6g}) is outside double range", log_value)
    return value


def _check_temperature(temperature):
    if not temperature > 0 or not math.isfinite(temperature):
        raise DomainError(f"temperature must be > 0, got {temperature!r}")


def geometric_factor(dimension: int) -> float:
    """f_D = sigma_D / (c a_D)."""
    _check_dimension(dimension)
    d = dimension
    return math.exp(
        math.log(d) + (d - 2) * _LOG_2 + 2.0 * log_gamma(0.5 * d) - _LOG_PI - log_gamma(d + 1.0)
    )


def _log_constants(d, constants):
    h, k, c = constants.planck_h, constants.boltzmann_k, constants.light_speed_c
    # k/(c h) grouped before taking logs: the separate logs of k, c, h are
    # large and nearly cancel
    thermal_wavenumber = k / (c * h)
    log_zeta = math.log(riemann_zeta(d + 1.0))
    log_a = (
        _LOG_2
        + math.log(d - 1)
        + math.log(k)
        + d * (0.5 * _LOG_PI + math.log(thermal_wavenumber))
        - log_gamma(0.5 * d)
        + log_zeta
        + log_gamma(d + 1.0)
    )
    log_sigma = (
        math.log(d * (d - 1))
        + math.log(c * k / (2.0 * math.pi))
        + d * (_LOG_2 + 0.5 * _LOG_PI + math.log(thermal_wavenumber))
        + log_gamma(0.5 * d)
        + log_zeta
    )
    return log_a, log_sigma


def radiation_constants(dimension: int, constants: PhysicalConstants = SI) -> RadiationConstants:
    """a_D (J m^-D K^-(D+1)) and sigma_D (W m^-(D-1) K^-(D+1)).

    Both are assembled as logarithms and exponentiated once at the end.
    """
    _check_dimension(dimension)
    d = int(dimension)
    log_a, log_sigma = _log_constants(d, constants)
    return RadiationConstants(
        dimension=d,
        a_D=_exp_checked(log_a, "a_D"),
        sigma_D=_exp_checked(log_sigma, "sigma_D"),
        log_a_D=log_a,
        log_sigma_D=log_sigma,
        geometric_factor_f_D=geometric_factor(d),
    )


def total_energy_density(
    dimension: int, temperature: float, constants: PhysicalConstants = SI
) -> float:
    """a_D T^(D+1) in J m^-D."""
    _check_dimension(dimension)
    _check_temperature(temperature)
    log_a, _ = _log_constants(int(dimension), constants)
    return _exp_checked(log_a + (dimension + 1) * math.log(temperature), "energy density")


def total_radiance(
    dimension: int, temperature: float, constants: PhysicalConstants = SI
) -> float:
    """sigma_D T^(D+1) in W m^-(D-1)."""
    _check_dimension(dimension)
    _check_temperature(temperature)
    _, log_sigma = _log_constants(int(dimension), constants)
    return _exp_checked(log_sigma + (dimension + 1) * math.log(temperature), "radiance")


def verify_density_by_quadrature(
    dimension: int, temperature: float, constants: PhysicalConstants = SI
) -> float:
    """Relative gap between the integrated spectrum and a_D T^(D+1).

    With z = h nu / k T the frequency integral of the spectral density
    becomes a prefactor times int z^D / (e^z - 1) dz, which is evaluated by
    ``bose_integral`` rather than through gamma and zeta. Everything is
    compared in log space so large D and T cannot overflow.
    """
    _check_dimension(dimension)
    _check_temperature(temperature)
    d = int(dimension)
    h, k, c = constants.planck_h, constants.boltzmann_k, constants.light_speed_c
    log_closed, _ = _log_constants(d, constants)
    log_closed += (d + 1) * math.log(temperature)
    log_quad = (
        math.log(2.0 * h * (d - 1))
        + 0.5 * d * _LOG_PI
        - d * math.log(c)
        - log_gamma(0.5 * d)
        + (d + 1) * math.log(k * temperature / h)
        + math.log(bose_integral(d))
    )
    return abs(math.expm1(log_quad - log_closed))
