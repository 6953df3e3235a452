"""
Standing-wave modes of a D-dimensional rectangular cavity.

A mode with positive integers n_i (Dirichlet walls, 2 l_i / lambda_i = n_i)
has frequency

    nu = (c / 2) * sqrt(sum_i (n_i / l_i)^2),

so the modes below a cutoff nu are the lattice points n_i >= 1 inside the
ellipsoid sum (n_i / l_i)^2 <= (2 nu / c)^2. Each carries D - 1
polarizations. The continuum estimate replaces the lattice count with the
octant volume,

    N(<nu) = (D - 1) * (Omega_D / D) * (l_c nu / c)^D,   l_c = (prod l_i)^(1/D),

which depends on the edges only through their product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real
from typing import Optional

from .constants import SI, PhysicalConstants
from .errors import DomainError, EnumerationBudgetError
from .numerics import gamma, log_gamma

__all__ = [
    "CavityGeometry",
    "ModeIndex",
    "ModeCountReport",
    "CompactFit",
    "DEFAULT_BUDGET",
    "mode_frequency",
    "count_modes_exact",
    "count_modes_continuum",
    "mode_density_continuum",
    "hyper_solid_angle",
    "characteristic_length",
    "validate_compact_fit",
    "mode_count_report",
    "cutoff_for_radius",
]

DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class CavityGeometry:
    """Cavity edge lengths in meters, with optional sizes of compact dimensions.

    ``compact_sizes`` has one entry per dimension; ``None`` marks a
    non-compact dimension. Edges may be floats, ints or Fractions; exact
    mode counting uses their exact rational values.
    """

    edges: tuple
    compact_sizes: Optional[tuple] = None

    def __post_init__(self):
        edges = tuple(self.edges)
        object.__setattr__(self, "edges", edges)
        if len(edges) < 2:
            raise DomainError(f"a cavity needs at least 2 dimensions, got {len(edges)}")
        for i, e in enumerate(edges, start=1):
            if not isinstance(e, Real) or not e > 0 or not math.isfinite(e):
                raise DomainError(f"edge {i} must be a finite positive length, got {e!r}")
        if self.compact_sizes is not None:
            sizes = tuple(self.compact_sizes)
            object.__setattr__(self, "compact_sizes", sizes)
            if len(sizes) != len(edges):
                raise DomainError(
                    f"compact_sizes has {len(sizes)} entries for a {len(edges)}-dimensional cavity"
                )
            for i, s in enumerate(sizes, start=1):
                if s is not None and (not isinstance(s, Real) or not s > 0 or not math.isfinite(s)):
                    raise DomainError(f"compact size {i} must be a finite positive length, got {s!r}")

    @property
    def dimension(self) -> int:
        return len(self.edges)

    @classmethod
    def cube(cls, dimension, edge=1):
        return cls(edges=(edge,) * dimension)


@dataclass(frozen=True)
class ModeIndex:
    n: tuple

    def __post_init__(self):
        n = tuple(self.n)
        object.__setattr__(self, "n", n)
        for i, v in enumerate(n, start=1):
            if int(v) != v or v < 1:
                raise DomainError(f"mode number {i} must be an integer >= 1, got {v!r}")


@dataclass(frozen=True)
class ModeCountReport:
    dimension: int
    frequency_cutoff: float
    exact_count: int
    continuum_estimate: float
    relative_error: float


@dataclass(frozen=True)
class CompactFit:
    """Outcome of ``validate_compact_fit``.

    ``violations`` lists 1-based axis numbers whose edge exceeds the size of
    the compact dimension.
    """

    violations: tuple = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid


def hyper_solid_angle(dimension: int) -> float:
    """Total solid angle 2 pi^(D/2) / Gamma(D/2) of the unit sphere in R^D."""
    if int(dimension) != dimension or dimension < 1:
        raise DomainError(f"dimension must be an integer >= 1, got {dimension!r}")
    d = int(dimension)
    if d <= 340:
        return 2.0 * math.pi ** (0.5 * d) / gamma(0.5 * d)
    return math.exp(math.log(2.0) + 0.5 * d * math.log(math.pi) - log_gamma(0.5 * d))


def characteristic_length(geometry: CavityGeometry) -> float:
    """Geometric mean of the edges, (prod l_i)^(1/D)."""
    logs = [math.log(e) for e in geometry.edges]
    return math.exp(math.fsum(logs) / len(logs))


def validate_compact_fit(geometry: CavityGeometry) -> CompactFit:
    """Check that no edge is longer than its compact dimension."""
    if geometry.compact_sizes is None:
        return CompactFit()
    bad = tuple(
        i
        for i, (edge, size) in enumerate(zip(geometry.edges, geometry.compact_sizes), start=1)
        if size is not None and edge > size
    )
    return CompactFit(bad)


def mode_frequency(
    geometry: CavityGeometry, mode: ModeIndex, constants: PhysicalConstants = SI
) -> float:
    if len(mode.n) != geometry.dimension:
        raise DomainError(
            f"mode has {len(mode.n)} indices but the cavity has {geometry.dimension} dimensions"
        )
    wavenumbers = [n / float(e) for n, e in zip(mode.n, geometry.edges)]
    return 0.5 * constants.light_speed_c * math.hypot(*wavenumbers)


def _check_cutoff(frequency_cutoff):
    if not frequency_cutoff > 0 or not math.isfinite(frequency_cutoff):
        raise DomainError(f"frequency cutoff must be > 0, got {frequency_cutoff!r}")


def _integer_ellipsoid(geometry, frequency_cutoff, constants):
    """Weights W_i and bound B with sum n_i^2 W_i <= B  <=>  mode below cutoff.

    Every input is converted to its exact rational value and the common
    denominator cleared, so points on the boundary are decided exactly and
    included.
    """
    inv_sq = [1 / Fraction(e) ** 2 for e in geometry.edges]
    radius_sq = (2 * Fraction(frequency_cutoff) / Fraction(constants.light_speed_c)) ** 2
    scale = math.lcm(radius_sq.denominator, *(w.denominator for w in inv_sq))
    weights = [int(w * scale) for w in inv_sq]
    bound = int(radius_sq * scale)
    return weights, bound


def _count_lattice(weights, bound):
    """Number of n in Z^D, n_i >= 1, with sum n_i^2 W_i <= bound."""
    d = len(weights)
    # least budget the trailing axes need when each sits at n = 1
    tail_min = [sum(weights[i:]) for i in range(d)] + [0]

    def recurse(axis, remaining):
        w = weights[axis]
        if axis == d - 1:
            return math.isqrt(remaining // w)
        total = 0
        room = remaining - tail_min[axis + 1]
        n = 1
        while n * n * w <= room:
            total += recurse(axis + 1, remaining - n * n * w)
            n += 1
        return total

    if bound < tail_min[0]:
        return 0
    return recurse(0, bound)


def count_modes_exact(
    geometry: CavityGeometry,
    frequency_cutoff: Real,
    constants: PhysicalConstants = SI,
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Number of standing-wave modes (times D - 1 polarizations) at or below the cutoff.

    Enumerates every lattice prefix that still admits at least one full
    mode, then counts the last axis in closed form with an integer square
    root, so the work scales with the mode count rather than with the
    bounding box. Raises ``EnumerationBudgetError`` when the continuum
    volume (an upper bound on the lattice count) exceeds ``budget``.
    """
    _check_cutoff(frequency_cutoff)
    d = geometry.dimension
    predicted = count_modes_continuum(geometry, float(frequency_cutoff), constants) / (d - 1)
    if predicted > budget:
        raise EnumerationBudgetError(
            f"about {predicted:.3g} lattice sites to visit, budget is {budget}"
        )
    weights, bound = _integer_ellipsoid(geometry, frequency_cutoff, constants)
    return (d - 1) * _count_lattice(weights, bound)


def count_modes_continuum(
    geometry: CavityGeometry, frequency_cutoff: float, constants: PhysicalConstants = SI
) -> float:
    """Continuum (volume) estimate of the mode count below the cutoff."""
    _check_cutoff(frequency_cutoff)
    d = geometry.dimension
    scaled = characteristic_length(geometry) * float(frequency_cutoff) / constants.light_speed_c
    return (d - 1) * hyper_solid_angle(d) / d * scaled**d


def mode_density_continuum(
    geometry: CavityGeometry, frequency: float, constants: PhysicalConstants = SI
) -> float:
    """Modes per unit frequency, (D - 1) Omega_D (l_c / c)^D nu^(D-1)."""
    _check_cutoff(frequency)
    d = geometry.dimension
    lc_over_c = characteristic_length(geometry) / constants.light_speed_c
    return (d - 1) * hyper_solid_angle(d) * lc_over_c**d * float(frequency) ** (d - 1)


def mode_count_report(
    geometry: CavityGeometry,
    frequency_cutoff: Real,
    constants: PhysicalConstants = SI,
    budget: int = DEFAULT_BUDGET,
) -> ModeCountReport:
    exact = count_modes_exact(geometry, frequency_cutoff, constants, budget)
    estimate = count_modes_continuum(geometry, float(frequency_cutoff), constants)
    rel = abs(exact - estimate) / estimate if estimate > 0 else math.nan
    return ModeCountReport(
        dimension=geometry.dimension,
        frequency_cutoff=float(frequency_cutoff),
        exact_count=exact,
        continuum_estimate=estimate,
        relative_error=rel,
    )


def cutoff_for_radius(radius: Real, constants: PhysicalConstants = SI) -> Fraction:
    """Exact cutoff frequency at which 2 nu / c equals ``radius``."""
    return Fraction(radius) * Fraction(constants.light_speed_c) / 2
