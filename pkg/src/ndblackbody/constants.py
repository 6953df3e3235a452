"""Physical constants used by every formula in the package."""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["PhysicalConstants", "SI", "NATURAL", "default_constants"]


@dataclass(frozen=True)
class PhysicalConstants:
    """Planck constant (J s), Boltzmann constant (J/K), speed of light (m/s).

    Build a variant with ``dataclasses.replace(SI, planck_h=...)`` or by
    calling the constructor directly; every value must be finite and > 0.
    """

    planck_h: float = 6.62607015e-34
    boltzmann_k: float = 1.380649e-23
    light_speed_c: float = 299792458.0

    def __post_init__(self):
        for name in ("planck_h", "boltzmann_k", "light_speed_c"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be a finite positive number, got {value!r}")


# exact by definition in the 2019 SI
SI = PhysicalConstants()

NATURAL = PhysicalConstants(planck_h=1.0, boltzmann_k=1.0, light_speed_c=1.0)


def default_constants() -> PhysicalConstants:
    return SI
