"""
Planck spectral energy density in D flat spatial dimensions.

    rho_T(nu) = 2 h (D-1) (sqrt(pi) nu)^D / (c^D Gamma(D/2) (exp(h nu / k T) - 1))

The density depends only on D, T and nu. There is deliberately no geometry
argument: the cavity size and shape drop out once the characteristic length
is fixed by the volume-preserving rescaling of the cavity axes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import SI, PhysicalConstants
from .errors import DomainError, RangeError
from .numerics import gamma, log_gamma

__all__ = [
    "SpectrumQuery",
    "SpectralDensityValue",
    "spectral_energy_density",
    "dimensionless_shape",
    "log_expm1",
]

_LOG_MAX = math.log(1.7976931348623157e308)
_LOG_MIN = math.log(2.2250738585072014e-308)


def _check_dimension(dimension):
    if int(dimension) != dimension or dimension < 2:
        raise DomainError(
            f"dimension must be an integer >= 2, got {dimension!r}; "
            "the (D-1) polarization factor makes the spectrum vanish at D = 1"
        )


@dataclass(frozen=True)
class SpectrumQuery:
    dimension: int
    temperature: float
    frequency: float

    def __post_init__(self):
        _check_dimension(self.dimension)
        if not self.temperature > 0 or not math.isfinite(self.temperature):
            raise DomainError(f"temperature must be > 0, got {self.temperature!r}")
        if not self.frequency > 0 or not math.isfinite(self.frequency):
            raise DomainError(f"frequency must be > 0, got {self.frequency!r}")


@dataclass(frozen=True)
class SpectralDensityValue:
    value: float
    dimensionless_z: float
    log_value: float


def log_expm1(z):
    """ln(e^z - 1) for z > 0 without overflow or cancellation."""
    if z > 36.0:
        # e^-z is below half an ulp of 1 past this point
        return z + math.log1p(-math.exp(-z))
    return math.log(math.expm1(z))


def dimensionless_shape(dimension: int, z: float) -> float:
    """z^D / (e^z - 1), the z-dependent factor of the spectral density."""
    _check_dimension(dimension)
    if not z > 0:
        raise DomainError(f"z must be > 0, got {z!r}")
    log_power = dimension * math.log(z)
    if z <= 700.0 and abs(log_power) < 700.0:
        return z**dimension / math.expm1(z)
    return math.exp(log_power - log_expm1(z))


def spectral_energy_density(
    q: SpectrumQuery, constants: PhysicalConstants = SI
) -> SpectralDensityValue:
    """Spectral energy density per unit volume and unit frequency (J s m^-D).

    The product is formed directly in floating point when every factor is
    representable, which keeps the D = 3 result within a few ulps of the
    textbook formula. Otherwise it is assembled as a logarithm; if even that
    leaves double range a ``RangeError`` carrying the log is raised.
    """
    d = q.dimension
    h, k, c = constants.planck_h, constants.boltzmann_k, constants.light_speed_c
    z = h * q.frequency / (k * q.temperature)

    log_value = (
        math.log(2.0 * h * (d - 1))
        + d * (0.5 * math.log(math.pi) + math.log(q.frequency) - math.log(c))
        - log_gamma(0.5 * d)
        - log_expm1(z)
    )

    if _LOG_MIN + 5.0 < log_value < _LOG_MAX - 5.0:
        try:
            prefactor = 2.0 * h * (d - 1) / gamma(0.5 * d)
            power = (math.sqrt(math.pi) * q.frequency / c) ** d
            boltzmann = math.expm1(z)
        except OverflowError:
            pass
        else:
            factors = (prefactor, power, boltzmann)
            if all(math.isfinite(f) and f > 0 and abs(math.log(f)) < 700.0 for f in factors):
                return SpectralDensityValue(prefactor * power / boltzmann, z, log_value)
        return SpectralDensityValue(math.exp(log_value), z, log_value)

    raise RangeError(
        f"spectral density exp({log_value:.6g}) is outside double range", log_value
    )
