import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import special

from specfun.gamma import gamma, gamma_ratio
from specfun.mittag_leffler import power_ml, power_ml_values
from specfun.series_result import SeriesResult
from util.errors import ConvergenceError, DomainError


def test_gamma_known_values():
    assert gamma(1) == 1.0
    assert gamma(5) == pytest.approx(24.0, rel=1e-15)
    assert gamma(0.5) == pytest.approx(1.7724538509055160, rel=1e-15)


@given(st.floats(min_value=0.05, max_value=60.0))
@settings(max_examples=50, deadline=None)
def test_gamma_matches_extended_precision(x):
    assert gamma(x) == pytest.approx(float(mpmath.gamma(x)), rel=1e-13)


@pytest.mark.parametrize("x", [0.0, -1.0, -0.5, float("nan")])
def test_gamma_domain(x):
    with pytest.raises(DomainError):
        gamma(x)


def test_gamma_overflow():
    with pytest.raises(OverflowError):
        gamma(200.0)


def test_gamma_ratio():
    assert gamma_ratio(3.0, 2.0) == pytest.approx(2.0 / 24.0, rel=1e-14)


def test_power_ml_at_zero_is_one():
    for k in (0.3, 1.0, 2.5):
        for p in (0.5, 2.0, math.e):
            result = power_ml(k, 1.0, p, 0.0)
            assert result.value == 1.0
            assert result.terms_used == 1


def test_power_ml_exponential_case():
    assert power_ml(1, 1, 2, 3).value == pytest.approx(8.0, rel=1e-13)
    assert power_ml(1, 1, 0.5, 2.0).value == pytest.approx(0.25, rel=1e-13)


def test_power_ml_half_order_against_partial_sum():
    with mpmath.workdps(40):
        oracle = mpmath.fsum((-1) ** n / mpmath.gamma(mpmath.mpf(n) / 2 + 1) for n in range(200))
    result = power_ml(0.5, 1, math.e, -1.0, 1e-12)
    assert result.value == pytest.approx(float(oracle), abs=1e-10)
    # E_{1/2}(-1) = e erfc(1)
    assert result.value == pytest.approx(float(special.erfcx(1.0)), abs=1e-10)


def test_power_ml_two_parameter():
    # E_{1,2}(z) = (e^z - 1) / z
    assert power_ml(1.0, 2.0, math.e, 0.7).value == pytest.approx(math.expm1(0.7) / 0.7, rel=1e-13)


@pytest.mark.parametrize("k, l, p, tol", [(0, 1, 2, 1e-14), (1, 0, 2, 1e-14), (1, 1, 0, 1e-14),
                                          (1, 1, -2, 1e-14), (1, 1, 2, 0.0)])
def test_power_ml_domain(k, l, p, tol):
    with pytest.raises(DomainError, match="requires"):
        power_ml(k, l, p, 1.0, tol)


def test_power_ml_term_cap():
    with pytest.raises(ConvergenceError) as info:
        power_ml(1.0, 1.0, math.e, 5.0, max_terms=3)
    assert info.value.context["terms"] == 3


@given(st.sampled_from([0.5, 1.0, 1.5]), st.sampled_from([1.0, 2.0]),
       st.sampled_from([0.5, 2.0, math.e, 10.0]), st.floats(min_value=-5.0, max_value=5.0))
@settings(max_examples=60, deadline=None)
def test_power_ml_rescaling_identity(k, l, p, tau):
    lhs = power_ml(k, l, p, tau).value
    rhs = power_ml(k, l, math.e, tau * math.log(p)).value
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-300)


@given(st.floats(min_value=-3.0, max_value=3.0), st.floats(min_value=0.3, max_value=2.0))
@settings(max_examples=40, deadline=None)
def test_tighter_tolerance_never_uses_fewer_terms(tau, k):
    loose = power_ml(k, 1.0, 2.0, tau, 1e-6)
    tight = power_ml(k, 1.0, 2.0, tau, 1e-13)
    assert tight.terms_used >= loose.terms_used
    assert loose.tail_estimate < 1e-6
    assert tight.value == pytest.approx(loose.value, abs=1e-5)


def test_power_ml_values_matches_scalar():
    taus = np.linspace(-2.0, 2.0, 9)
    values = power_ml_values(0.8, 1.2, 3.0, taus)
    expected = [power_ml(0.8, 1.2, 3.0, t).value for t in taus]
    np.testing.assert_allclose(values, expected, rtol=1e-15, atol=0)


def test_series_result_validation():
    with pytest.raises(DomainError):
        SeriesResult(1.0, 0, 0.0)
    with pytest.raises(DomainError):
        SeriesResult(1.0, 1, -1.0)
