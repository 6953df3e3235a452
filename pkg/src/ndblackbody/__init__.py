"""Blackbody radiation observables in D flat spatial dimensions."""

from .cavity_modes import (
    CavityGeometry,
    ModeCountReport,
    ModeIndex,
    characteristic_length,
    count_modes_continuum,
    count_modes_exact,
    hyper_solid_angle,
    mode_count_report,
    mode_frequency,
    validate_compact_fit,
)
from .constants import NATURAL, SI, PhysicalConstants, default_constants
from .errors import (
    ConvergenceError,
    DomainError,
    EnumerationBudgetError,
    NoSignChangeError,
    RangeError,
)
from .numerics import (
    Bracket,
    RealTolerance,
    bose_integral,
    gamma,
    log_gamma,
    riemann_zeta,
    solve_bracketed,
)
from .radiometry import (
    RadiationConstants,
    radiation_constants,
    total_energy_density,
    total_radiance,
    verify_density_by_quadrature,
)
from .spectrum import SpectralDensityValue, SpectrumQuery, dimensionless_shape, spectral_energy_density
from .wien import WienSolution, peak_frequency, solve_wien

__version__ = "0.1.0"

__all__ = [
    "CavityGeometry",
    "ModeCountReport",
    "ModeIndex",
    "characteristic_length",
    "count_modes_continuum",
    "count_modes_exact",
    "hyper_solid_angle",
    "mode_count_report",
    "mode_frequency",
    "validate_compact_fit",
    "NATURAL",
    "SI",
    "PhysicalConstants",
    "default_constants",
    "ConvergenceError",
    "DomainError",
    "EnumerationBudgetError",
    "NoSignChangeError",
    "RangeError",
    "Bracket",
    "RealTolerance",
    "bose_integral",
    "gamma",
    "log_gamma",
    "riemann_zeta",
    "solve_bracketed",
    "RadiationConstants",
    "radiation_constants",
    "total_energy_density",
    "total_radiance",
    "verify_density_by_quadrature",
    "SpectralDensityValue",
    "SpectrumQuery",
    "dimensionless_shape",
    "spectral_energy_density",
    "WienSolution",
    "peak_frequency",
    "solve_wien",
    "__version__",
]
