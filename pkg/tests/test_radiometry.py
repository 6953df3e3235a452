import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from ndblackbody.constants import NATURAL, SI
from ndblackbody.errors import DomainError
from ndblackbody.radiometry import (
    geometric_factor,
    radiation_constants,
    total_energy_density,
    total_radiance,
    verify_density_by_quadrature,
)
from ndblackbody.spectrum import SpectrumQuery, spectral_energy_density

mpmath.mp.dps = 40
H, K, C = (mpmath.mpf(SI.planck_h), mpmath.mpf(SI.boltzmann_k), mpmath.mpf(SI.light_speed_c))


def rel(a, b):
    return abs(a - b) / abs(b)


def mp_a(d):
    return (
        2 * (d - 1) * K ** (d + 1) / mpmath.gamma(mpmath.mpf(d) / 2)
        * (mpmath.sqrt(mpmath.pi) / (C * H)) ** d
        * mpmath.zeta(d + 1) * mpmath.gamma(d + 1)
    )


def mp_sigma(d):
    return (
        d * (d - 1) * C * K / (2 * mpmath.pi)
        * (2 * mpmath.sqrt(mpmath.pi) * K / (C * H)) ** d
        * mpmath.gamma(mpmath.mpf(d) / 2) * mpmath.zeta(d + 1)
    )


def test_sigma3_is_textbook_stefan_boltzmann():
    h, k, c = SI.planck_h, SI.boltzmann_k, SI.light_speed_c
    textbook = 2 * math.pi**5 * k**4 / (15 * c**2 * h**3)
    rc = radiation_constants(3)
    assert rel(rc.sigma_D, textbook) <= 1e-12
    assert rel(rc.sigma_D, 5.670374419e-8) <= 1e-9
    assert rel(rc.a_D, 4 * rc.sigma_D / c) <= 1e-12
    assert rel(rc.a_D, 7.565733250280005e-16) <= 1e-13


def test_sigma2():
    rc = radiation_constants(2)
    exact = 4 * K**3 * mpmath.zeta(3) / (C * H**2)
    assert rel(rc.sigma_D, float(exact)) <= 1e-13
    assert rel(rc.sigma_D, 9.613955430050373e-11) <= 1e-13
    assert rel(rc.geometric_factor_f_D, 1 / math.pi) <= 1e-14


@pytest.mark.parametrize("d", [2, 3, 4, 7, 12, 30, 64])
def test_against_high_precision(d):
    rc = radiation_constants(d)
    assert rel(rc.a_D, float(mp_a(d))) <= 1e-12
    assert rel(rc.sigma_D, float(mp_sigma(d))) <= 1e-12


@pytest.mark.parametrize("d", range(2, 31))
def test_consistency_factor(d):
    rc = radiation_constants(d)
    f = d * 2.0 ** (d - 2) * math.gamma(d / 2) ** 2 / (math.pi * math.gamma(d + 1))
    assert rel(rc.geometric_factor_f_D, f) <= 1e-12
    assert rel(rc.sigma_D, f * SI.light_speed_c * rc.a_D) <= 1e-12
    # same factor from the duplication-formula form
    assert rel(f, math.gamma(d / 2) / (2 * math.sqrt(math.pi) * math.gamma((d + 1) / 2))) <= 1e-13


def test_geometric_factor_known_dimensions():
    assert rel(geometric_factor(3), 0.25) <= 1e-14
    assert rel(geometric_factor(2), 1 / math.pi) <= 1e-14


@pytest.mark.parametrize("d", range(2, 65))
def test_log_values_finite_and_consistent(d):
    rc = radiation_constants(d)
    assert math.isfinite(rc.log_a_D) and math.isfinite(rc.log_sigma_D)
    assert rc.a_D > 0 and rc.sigma_D > 0
    assert rel(math.exp(rc.log_a_D), rc.a_D) <= 1e-12
    assert rel(math.exp(rc.log_sigma_D), rc.sigma_D) <= 1e-12


def test_total_energy_density_300k():
    u = total_energy_density(3, 300.0)
    assert rel(u, 6.128243932726804e-06) <= 1e-13
    assert rel(total_energy_density(3, 600.0), 16 * u) <= 1e-14


def test_total_energy_density_natural_units():
    # 2 (D-1) / Gamma(1) * pi * zeta(3) * Gamma(3) = 4 pi zeta(3)
    got = total_energy_density(2, 1.0, NATURAL)
    assert rel(got, 4 * math.pi * 1.2020569031595943) <= 1e-14
    assert rel(got, 15.105492544652316) <= 1e-14


def test_total_radiance_sun():
    assert rel(total_radiance(3, 5772.0), 62938592.47033595) <= 1e-13
    assert rel(total_radiance(3, 1.0), radiation_constants(3).sigma_D) <= 1e-15


@pytest.mark.parametrize("d", range(2, 11))
def test_log_log_slope(d):
    r = [total_radiance(d, t) for t in (1.0, 10.0, 100.0)]
    s1 = math.log(r[1] / r[0]) / math.log(10.0)
    s2 = math.log(r[2] / r[1]) / math.log(10.0)
    assert abs(s1 - (d + 1)) <= 1e-10 and abs(s2 - (d + 1)) <= 1e-10


@settings(max_examples=60)
@given(st.integers(2, 20), st.floats(0.1, 1e4), st.floats(0.01, 100.0))
def test_power_law(d, t, m):
    assert rel(total_radiance(d, m * t) / total_radiance(d, t), m ** (d + 1)) <= 1e-12


@pytest.mark.parametrize("d", range(2, 13))
@pytest.mark.parametrize("t", [1.0, 300.0, 5000.0])
def test_quadrature_oracle(d, t):
    assert verify_density_by_quadrature(d, t) <= 1e-9


def test_quadrature_examples():
    assert verify_density_by_quadrature(3, 300.0) <= 1e-10
    assert verify_density_by_quadrature(2, 1.0, NATURAL) <= 1e-10
    assert verify_density_by_quadrature(10, 5000.0) <= 1e-9


def integrate_spectrum(d, t):
    """Frequency integral of the spectral density itself, by QUADPACK."""
    scale = SI.boltzmann_k * t / SI.planck_h

    def integrand(z):
        return spectral_energy_density(SpectrumQuery(d, t, z * scale)).value

    pieces = [(0, 1), (1, d), (d, 4 * d), (4 * d, 60 * d)]
    return scale * sum(quad(integrand, a, b, epsabs=0, epsrel=1e-13, limit=200)[0] for a, b in pieces)


@pytest.mark.parametrize("d", [2, 3, 6, 12])
@pytest.mark.parametrize("t", [1.0, 5000.0])
def test_direct_integral_of_spectrum(d, t):
    assert rel(integrate_spectrum(d, t), total_energy_density(d, t)) <= 1e-12


@pytest.mark.parametrize("fn", [total_energy_density, total_radiance, verify_density_by_quadrature])
def test_domain_errors(fn):
    with pytest.raises(DomainError):
        fn(1, 300.0)
    with pytest.raises(DomainError):
        fn(3, 0.0)


def test_radiation_constants_rejects_one_dimension():
    with pytest.raises(DomainError):
        radiation_constants(1)
