"""
Special functions and small numerical kernels.

Everything here works in plain double precision and has no dependencies
beyond the standard library:

- gamma, log_gamma : Lanczos approximation, Stirling series, and a Taylor
  series around the zeros of log-gamma at 1 and 2
- riemann_zeta : alternating (eta) series with Borwein's acceleration
- bose_integral : int_0^inf z^p / (e^z - 1) dz by Bernoulli series on [0, 1]
  plus double-exponential quadrature on [1, inf); never touches gamma or zeta
- solve_bracketed : safeguarded Newton / secant / bisection root finder
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import ConvergenceError, DomainError, NoSignChangeError

__all__ = [
    "RealTolerance",
    "Bracket",
    "DEFAULT_TOLERANCE",
    "gamma",
    "log_gamma",
    "riemann_zeta",
    "bose_integral",
    "solve_bracketed",
]


@dataclass(frozen=True)
class RealTolerance:
    relative: float = 1e-15
    absolute: float = 0.0
    max_iterations: int = 200

    def __post_init__(self):
        if not 0.0 < self.relative < 1.0:
            raise ValueError(f"relative tolerance must lie in (0, 1), got {self.relative!r}")
        if not self.absolute >= 0.0:
            raise ValueError(f"absolute tolerance must be >= 0, got {self.absolute!r}")
        if int(self.max_iterations) != self.max_iterations or self.max_iterations < 1:
            raise ValueError(f"max_iterations must be a positive integer, got {self.max_iterations!r}")


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"bracket needs lo < hi, got [{self.lo!r}, {self.hi!r}]")


DEFAULT_TOLERANCE = RealTolerance()


# ---------------------------------------------------------------------------
# Gamma
# ---------------------------------------------------------------------------

# Lanczos approximation with g = 7, n = 9 (Godfrey's coefficients).
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)
_EULER_GAMMA = 0.57721566490153286061


def _check_positive(x, name="x"):
    if not x > 0.0 or math.isnan(x):
        raise DomainError(f"{name} must be > 0, got {x!r}")


def _lanczos_gamma_1_2(x):
    """Gamma(x) for x in [1, 2)."""
    y = x - 1.0
    acc = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        acc += c / (y + i)
    t = y + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (y + 0.5) * math.exp(-t) * acc


def gamma(x: float) -> float:
    """Gamma function for real x > 0.

    The Lanczos sum is only evaluated on [1, 2); other arguments are moved
    there with the recurrence Gamma(x + 1) = x Gamma(x). Above 30 the result
    is taken from ``log_gamma`` and may overflow (raises OverflowError past
    about x = 171.6).
    """
    _check_positive(x)
    x = float(x)
    if x > 30.0:
        return math.exp(log_gamma(x))
    if x == int(x):
        return float(math.factorial(int(x) - 1))
    if x < 1.0:
        return _lanczos_gamma_1_2(x + 1.0) / x
    n = int(x) - 1
    y = x - n
    result = _lanczos_gamma_1_2(y)
    for k in range(n):
        result *= y + k
    return result


# B_{2k} / (2k (2k - 1)) for the Stirling series.
_STIRLING_COEF = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)

_LOGGAMMA_TAYLOR_TERMS = 40
_zeta_int_cache: list = []


def _log_gamma_near_one(eps):
    """ln Gamma(1 + eps) for |eps| <= 0.25 via its Taylor series in zeta(k)."""
    if not _zeta_int_cache:
        _zeta_int_cache.extend(riemann_zeta(k) for k in range(2, _LOGGAMMA_TAYLOR_TERMS + 2))
    total = 0.0
    power = -eps
    for k, zk in enumerate(_zeta_int_cache, start=2):
        power *= -eps
        total += zk * power / k
    return -_EULER_GAMMA * eps + total


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0, without overflow."""
    _check_positive(x)
    x = float(x)
    # log-gamma vanishes at 1 and 2; a series keeps the relative error there small
    if abs(x - 1.0) <= 0.25:
        return _log_gamma_near_one(x - 1.0)
    if abs(x - 2.0) <= 0.25:
        return _log_gamma_near_one(x - 2.0) + math.log1p(x - 2.0)
    if x < 15.0:
        return math.log(gamma(x))
    inv = 1.0 / x
    inv2 = inv * inv
    series = 0.0
    for c in reversed(_STIRLING_COEF):
        series = series * inv2 + c
    return (x - 0.5) * math.log(x) - x + _HALF_LOG_TWO_PI + series * inv


# ---------------------------------------------------------------------------
# Riemann zeta
# ---------------------------------------------------------------------------

def _borwein_terms():
    # smallest n whose error bound 3 / (3 + sqrt 8)^n is below 1e-15
    n = math.ceil(math.log(3e15) / math.log(3.0 + math.sqrt(8.0)))
    d = []
    acc = 0
    for i in range(n + 1):
        acc += Fraction(math.factorial(n + i - 1) * 4**i, math.factorial(n - i) * math.factorial(2 * i))
        d.append(n * acc)
    dn = d[n]
    # weights (d_k - d_n) / d_n are exact rationals; round once
    return tuple(float((d[k] - dn) / dn) for k in range(n))


_BORWEIN_WEIGHTS = _borwein_terms()


def riemann_zeta(s: float) -> float:
    """Riemann zeta function for real s > 1.

    Sums the alternating eta series with Borwein's weights and divides by
    1 - 2^(1 - s).
    """
    if not s > 1.0 or math.isnan(s):
        raise DomainError(f"riemann_zeta needs s > 1, got {s!r}")
    s = float(s)
    eta = 0.0
    for k, w in enumerate(_BORWEIN_WEIGHTS):
        term = w * (k + 1.0) ** (-s)
        eta += -term if k % 2 == 0 else term
    return eta / -math.expm1((1.0 - s) * math.log(2.0))


# ---------------------------------------------------------------------------
# Bose-Einstein integral
# ---------------------------------------------------------------------------

def _bernoulli_over_factorial(count):
    """B_n / n! for n < count, with B_1 = -1/2 (generating function z/(e^z - 1))."""
    b = [Fraction(1)]
    for m in range(1, count):
        b.append(-sum(math.comb(m + 1, k) * b[k] for k in range(m)) / (m + 1))
    return tuple(float(bn / math.factorial(n)) for n, bn in enumerate(b))


_BERNOULLI_SCALED = _bernoulli_over_factorial(40)


def _bose_head(p):
    # int_0^1 z^(p-1) * z/(e^z - 1) dz, termwise; converges like (2 pi)^-n
    total = 0.0
    for n, c in enumerate(_BERNOULLI_SCALED):
        if c:
            total += c / (n + p)
    return total


def _bose_tail(p, rel_tol=1e-15, max_level=12):
    """int_1^inf z^p / (e^z - 1) dz by exp-sinh (double exponential) quadrature."""
    half_pi = 0.5 * math.pi

    def term(t):
        u = half_pi * math.sinh(t)
        if u > 700.0:
            return 0.0
        e = math.exp(u)
        z = 1.0 + e
        weight = half_pi * math.cosh(t) * e
        log_f = p * math.log(z) - z
        if log_f < -745.0:
            return 0.0
        return math.exp(log_f) / -math.expm1(-z) * weight

    def sweep(h, first, step):
        # nodes t = +-(first + m*step)*h, walking outward until terms vanish
        total = 0.0
        for direction in (1, -1):
            j = first if (direction == 1 or first) else step
            while j * h <= 8.0:
                v = term(direction * j * h)
                total += v
                if j * h > 1.0 and v < 1e-20 * total:
                    break
                j += step
        return total

    h = 0.5
    raw = sweep(h, 0, 1)
    estimate = h * raw
    for _ in range(max_level):
        h *= 0.5
        # only the odd multiples of the new step are new nodes
        raw += sweep(h, 1, 2)
        new = h * raw
        if abs(new - estimate) <= rel_tol * abs(new):
            return new
        estimate = new
    return estimate


def bose_integral(p: float) -> float:
    """int_0^inf z^p / (e^z - 1) dz for p > 0.

    Equal to Gamma(p + 1) zeta(p + 1), but computed without either function
    so it can serve as an independent check on them.
    """
    _check_positive(p, "p")
    p = float(p)
    return _bose_head(p) + _bose_tail(p)


# ---------------------------------------------------------------------------
# Root finding
# ---------------------------------------------------------------------------

def solve_bracketed(
    f: Callable[[float], float],
    bracket: Bracket,
    tol: RealTolerance = DEFAULT_TOLERANCE,
    fprime: Optional[Callable[[float], float]] = None,
    x0: Optional[float] = None,
) -> float:
    """Find a root of ``f`` inside ``bracket``.

    Steps are Newton (when ``fprime`` is given) or secant, and fall back to
    bisection whenever the step leaves the bracket or the bracket fails to
    halve. The sign change is kept across the bracket at every iteration, so
    convergence is guaranteed. Returns once the bracket width is at most
    ``tol.relative * |x| + tol.absolute`` or an exact zero is hit.
    """
    a, b = float(bracket.lo), float(bracket.hi)
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0.0) == (fb > 0.0):
        raise NoSignChangeError(f"no sign change on [{a!r}, {b!r}]: f(lo)={fa!r}, f(hi)={fb!r}")

    x = float(x0) if x0 is not None and a < x0 < b else 0.5 * (a + b)
    widths = [b - a]
    force_bisect = False
    for _ in range(tol.max_iterations):
        fx = f(x)
        if fx == 0.0:
            return x
        if (fx > 0.0) == (fa > 0.0):
            a, fa = x, fx
        else:
            b, fb = x, fx
        width = b - a
        best = a if abs(fa) <= abs(fb) else b
        slack = tol.relative * abs(best) + tol.absolute
        if width <= slack:
            return best
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            # bracket is down to adjacent doubles
            return best

        step = None
        if not force_bisect:
            if fprime is not None:
                d = fprime(x)
                if d != 0.0 and math.isfinite(d):
                    step = x - fx / d
            else:
                step = b - fb * (b - a) / (fb - fa)
        if step is not None and math.isfinite(step):
            # a step smaller than the tolerance is pushed just across the root
            # so that the far end of the bracket moves too
            nudge = 0.5 * slack
            if abs(step - x) < nudge:
                step = x + math.copysign(nudge, step - x if step != x else mid - x)
        if step is None or not a < step < b:
            step = mid
        # bisect next time unless the bracket halved over the last two steps
        widths.append(width)
        force_bisect = len(widths) >= 3 and width > 0.5 * widths[-3]
        x = step
    raise ConvergenceError(f"no convergence within {tol.max_iterations} iterations; bracket [{a!r}, {b!r}]")
