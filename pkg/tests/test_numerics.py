import math
import random

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ndblackbody.errors import ConvergenceError, DomainError, NoSignChangeError
from ndblackbody.numerics import (
    Bracket,
    RealTolerance,
    bose_integral,
    gamma,
    log_gamma,
    riemann_zeta,
    solve_bracketed,
)

mpmath.mp.dps = 40


def rel(a, b):
    return abs(a - b) / abs(b)


# ---------------------------------------------------------------- gamma

@pytest.mark.parametrize(
    "x, expected",
    [
        (0.5, 1.7724538509055159),
        (5.0, 24.0),
        (3.5, 3.3233509704478426),
    ],
)
def test_gamma_examples(x, expected):
    assert rel(gamma(x), expected) <= 1e-15


def test_gamma_against_mpmath():
    rng = random.Random(1)
    xs = [1e-8, 0.001, 0.999, 1.0, 1.5, 2.0, 29.999, 30.0] + [rng.uniform(1e-3, 30) for _ in range(500)]
    for x in xs:
        assert rel(gamma(x), float(mpmath.gamma(x))) <= 1e-13, x


@pytest.mark.parametrize("bad", [0.0, -1.0, -0.5, float("nan")])
def test_gamma_domain(bad):
    with pytest.raises(DomainError):
        gamma(bad)


@settings(max_examples=100)
@given(st.floats(min_value=0.5, max_value=20.0))
def test_gamma_recurrence(x):
    assert rel(gamma(x + 1.0), x * gamma(x)) <= 1e-12


# ------------------------------------------------------------ log_gamma

def test_log_gamma_examples():
    assert abs(log_gamma(1.0)) <= 1e-16
    assert rel(log_gamma(5.0), 3.1780538303479458) <= 1e-15
    # ln(100!) from the exact big-integer factorial
    exact = math.log(math.factorial(100))
    assert rel(log_gamma(101.0), exact) <= 1e-14
    assert rel(log_gamma(101.0), 363.73937555556347) <= 1e-14


def test_log_gamma_against_mpmath():
    rng = random.Random(2)
    xs = [1 + 1e-10, 2 - 1e-9, 0.75, 1.25, 1.75, 2.25, 14.999, 15.0, 1e3, 1e6]
    xs += [rng.uniform(0.01, 50) for _ in range(400)]
    xs += [rng.uniform(0.7, 2.3) for _ in range(400)]
    xs += [10 ** rng.uniform(1, 6) for _ in range(200)]
    for x in xs:
        assert rel(log_gamma(x), float(mpmath.loggamma(x))) <= 1e-12, x


@settings(max_examples=100)
@given(st.floats(min_value=0.5, max_value=30.0))
def test_exp_log_gamma_matches_gamma(x):
    assert rel(math.exp(log_gamma(x)), gamma(x)) <= 1e-12


def test_log_gamma_domain():
    with pytest.raises(DomainError):
        log_gamma(0.0)


# ---------------------------------------------------------------- zeta

@pytest.mark.parametrize(
    "s, expected",
    [
        (2.0, math.pi**2 / 6),
        (4.0, math.pi**4 / 90),
    ],
)
def test_zeta_closed_forms(s, expected):
    assert rel(riemann_zeta(s), expected) <= 1e-15


def _zeta_by_euler_maclaurin(s, n=50):
    """Direct partial sum plus Euler-Maclaurin tail; independent of the eta series."""
    head = math.fsum(k ** -s for k in range(1, n))
    tail = n ** (1 - s) / (s - 1) + 0.5 * n**-s
    # Bernoulli corrections B2, B4, B6
    tail += s * n ** (-s - 1) / 12
    tail -= s * (s + 1) * (s + 2) * n ** (-s - 3) / 720
    tail += s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * n ** (-s - 5) / 30240
    return head + tail


def test_zeta_three_by_euler_maclaurin():
    oracle = _zeta_by_euler_maclaurin(3.0)
    assert rel(oracle, 1.2020569031595943) <= 1e-14
    assert rel(riemann_zeta(3.0), oracle) <= 1e-14


def test_zeta_against_mpmath():
    rng = random.Random(3)
    ss = [1.0001, 1.01, 1.1, 1.5, 65.0, 100.0] + [rng.uniform(1.001, 80) for _ in range(300)]
    for s in ss:
        assert rel(riemann_zeta(s), float(mpmath.zeta(s))) <= 1e-12, s


def test_zeta_strictly_decreasing():
    grid = [1.1 + 0.05 * i for i in range(int((20 - 1.1) / 0.05) + 1)]
    values = [riemann_zeta(s) for s in grid]
    assert all(a > b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("bad", [1.0, 0.5, -2.0])
def test_zeta_domain(bad):
    with pytest.raises(DomainError):
        riemann_zeta(bad)


# ------------------------------------------------------- bose integral

@pytest.mark.parametrize(
    "p, expected",
    [
        (3.0, math.pi**4 / 15),
        (1.0, math.pi**2 / 6),
        (5.0, 120 * math.pi**6 / 945),
    ],
)
def test_bose_integral_closed_forms(p, expected):
    assert rel(bose_integral(p), expected) <= 1e-13


@pytest.mark.parametrize("p", range(1, 13))
def test_bose_integral_matches_gamma_times_zeta(p):
    # two computation paths that share no code
    assert rel(bose_integral(p), gamma(p + 1.0) * riemann_zeta(p + 1.0)) <= 1e-10


@pytest.mark.parametrize("p", [0.05, 0.3, 0.5, 2.5, 7.25, 40.0, 64.0])
def test_bose_integral_non_integer_against_mpmath(p):
    exact = mpmath.gamma(p + 1) * mpmath.zeta(p + 1)
    assert rel(bose_integral(p), float(exact)) <= 1e-10


def test_bose_integral_domain():
    with pytest.raises(DomainError):
        bose_integral(0.0)


# -------------------------------------------------------------- solver

def test_solver_sqrt_two():
    x = solve_bracketed(lambda x: x * x - 2, Bracket(1.0, 2.0), RealTolerance(relative=1e-12))
    assert rel(x, math.sqrt(2)) <= 1e-12


def _bisect(f, lo, hi, tol=1e-15):
    flo = f(lo)
    while hi - lo > tol * hi:
        mid = 0.5 * (lo + hi)
        if (f(mid) > 0) == (flo > 0):
            lo, flo = mid, f(mid)
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_solver_wien_like_function_against_bisection():
    f = lambda x: math.exp(x) * (3 - x) - 3
    oracle = _bisect(f, 0.1, 2.999)
    assert abs(oracle - 2.8214393721220787) <= 1e-12
    for fprime in (None, lambda x: math.exp(x) * (2 - x)):
        x = solve_bracketed(f, Bracket(0.1, 2.999), RealTolerance(relative=1e-12), fprime=fprime)
        assert abs(x - oracle) <= 1e-12


def test_solver_no_sign_change():
    with pytest.raises(NoSignChangeError):
        solve_bracketed(lambda x: x, Bracket(1.0, 2.0))


def test_solver_non_convergence():
    with pytest.raises(ConvergenceError):
        solve_bracketed(lambda x: math.atan(x - 1.234567), Bracket(-30.0, 10.0), RealTolerance(1e-15, 0.0, 3))


def test_solver_bad_newton_derivative_falls_back():
    # a derivative pointing the wrong way must not break convergence
    x = solve_bracketed(lambda x: x**3 - 5, Bracket(0.0, 4.0), fprime=lambda x: -1.0)
    assert rel(x, 5 ** (1 / 3)) <= 1e-13


@settings(max_examples=60)
@given(
    st.floats(min_value=-50, max_value=50),
    st.floats(min_value=0.01, max_value=20),
    st.floats(min_value=0.01, max_value=20),
)
def test_solver_keeps_sign_change(root, left, right):
    f = lambda x: math.tanh(x - root) + 0.1 * (x - root)
    lo, hi = root - left, root + right
    x = solve_bracketed(f, Bracket(lo, hi), RealTolerance(relative=1e-12, absolute=1e-12))
    assert lo <= x <= hi
    width = 1e-12 * abs(x) + 1e-12
    assert abs(x - root) <= width + 4 * math.ulp(root)


def test_tolerance_validation():
    with pytest.raises(ValueError):
        RealTolerance(relative=0.0)
    with pytest.raises(ValueError):
        RealTolerance(relative=1.0)
    with pytest.raises(ValueError):
        RealTolerance(absolute=-1.0)
    with pytest.raises(ValueError):
        RealTolerance(max_iterations=0)
    with pytest.raises(ValueError):
        Bracket(2.0, 1.0)
