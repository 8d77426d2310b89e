import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from operators.functions import ScalarFunction, WeightFunction, constant, parse_function, parse_weight
from operators.power_derivative import pfd_function, pfd_quadrature, pfd_quadrature_many, pfd_series
from operators.power_integral import compose_identity_residual, iterated_pfi, pfi
from operators.power_params import PowerParams
from operators.quadrature import QuadratureConfig, unit_rule
from operators.riemann_liouville import rl_integral
from specfun.gamma import gamma
from util.errors import DomainError
from verify.oracles import naive_iterated_pfi, oracle_rl_integral

ONE = WeightFunction.unit()
SIN = parse_function("sin")
EXP = parse_function("exp")


def test_power_params_accessors():
    pp = PowerParams(0.5, 1.0, math.e)
    assert (pp.chi, pp.phi, pp.mu, pp.log_p) == (0.5, 0.5, 1.0, 1.0)
    assert pp.series_ratio == -1.0


@pytest.mark.parametrize("alpha, beta, p", [(1.0, 1.0, 2.0), (-0.1, 1.0, 2.0), (0.5, 0.0, 2.0), (0.5, 1.0, 0.0)])
def test_power_params_domain(alpha, beta, p):
    with pytest.raises(DomainError, match="constraint violated"):
        PowerParams(alpha, beta, p)


def test_power_params_normalization():
    pp = PowerParams(0.5, 1.0, 2.0, normalization=lambda a: 1.0 + a * (1.0 - a))
    assert pp.chi == pytest.approx(0.5 / 1.25)
    with pytest.raises(DomainError, match="N\\(0\\) = 1"):
        PowerParams(0.5, 1.0, 2.0, normalization=lambda a: 2.0)


def test_parse_specs():
    assert parse_function("t^2")(np.array([3.0]))[0] == 9.0
    assert parse_function("const=2.5")(np.array([1.0]))[0] == 2.5
    assert parse_weight("exp(-2*t)")(np.array([1.0]))[0] == pytest.approx(math.exp(-2.0))
    assert parse_weight("1+0.5*t^2").derivative(np.array([2.0]))[0] == 2.0
    with pytest.raises(DomainError):
        parse_function("tan")
    with pytest.raises(DomainError):
        parse_weight("t")


def test_unit_rule_integrates_one():
    for order in (0.3, 1.0, 2.5):
        x, w = unit_rule(order, QuadratureConfig(panels=16))
        assert w.sum() == pytest.approx(1.0, abs=1e-14)
        assert np.all((x > 0) & (x < 1))


def test_rl_integral_plain_integral():
    assert rl_integral(constant(1.0), ONE, 1.0, 0.0, 2.0) == pytest.approx(2.0, abs=1e-12)


@pytest.mark.parametrize("beta", [0.3, 0.5, 1.0, 1.5, 2.5])
def test_rl_integral_of_one(beta):
    expected = 1.3 ** beta / gamma(beta + 1.0)
    assert rl_integral(constant(1.0), ONE, beta, 0.2, 1.5) == pytest.approx(expected, rel=1e-11)


def test_rl_integral_weighted_against_oracles():
    f, w = parse_function("t"), WeightFunction.exponential(1.0)
    value = rl_integral(f, w, 0.5, 0.0, 1.0)
    assert value == pytest.approx(oracle_rl_integral(f, w, 0.5, 0.0, 1.0), abs=1e-8)
    with mpmath.workdps(30):
        reference = mpmath.quad(lambda tau: (1 - tau) ** mpmath.mpf(-0.5) * mpmath.exp(-tau) * tau, [0, 1])
        reference = reference / mpmath.gamma(0.5) / mpmath.exp(-1)
    assert value == pytest.approx(float(reference), abs=1e-10)


def test_pfd_of_constant_is_zero():
    pp = PowerParams(0.4, 0.8, 3.0)
    values = pfd_quadrature_many(constant(2.0), pp, ONE, 0.0, [0.0, 0.5, 1.0], QuadratureConfig())
    assert np.all(values == 0.0)


def test_pfd_vanishes_at_base():
    pp = PowerParams(0.4, 0.8, 3.0)
    assert pfd_quadrature(SIN, pp, WeightFunction.quadratic(1.0), 0.3, 0.3) == 0.0


def test_pfd_rejects_t_below_a():
    with pytest.raises(DomainError, match="t >= a"):
        pfd_quadrature(SIN, PowerParams(0.4, 0.8, 3.0), ONE, 1.0, 0.5)


def test_pfd_rejects_nonpositive_weight():
    w = WeightFunction(lambda x: 1.0 - x, lambda x: -np.ones_like(x), "1-t")
    with pytest.raises(DomainError, match="must be > 0"):
        pfd_quadrature(SIN, PowerParams(0.4, 0.8, 3.0), w, 0.0, 2.0)


def test_pfd_with_unit_power_telescopes():
    pp = PowerParams(0.4, 0.8, 1.0)
    w = WeightFunction.exponential(1.0)
    a, t = 0.2, 1.0
    expected = (math.sin(t) - math.exp(-a) * math.sin(a) / math.exp(-t)) / pp.chi
    assert pfd_quadrature(SIN, pp, w, a, t) == pytest.approx(expected, rel=1e-10)
    series = pfd_series(SIN, pp, w, a, t)
    assert series.terms_used == 1
    assert series.value == pytest.approx(expected, rel=1e-10)


@pytest.mark.parametrize("t", [0.25, 0.5, 1.0])
def test_pfd_caputo_fabrizio_closed_form(t):
    pp = PowerParams(0.5, 1.0, math.e)
    expected = (1.0 - math.exp(-t)) / pp.chi
    assert pfd_quadrature(parse_function("t"), pp, ONE, 0.0, t) == pytest.approx(expected, abs=1e-10)


def test_pfd_series_order_zero():
    pp = PowerParams(0.0, 1.3, 5.0)
    w = WeightFunction.quadratic(1.0)
    result = pfd_series(SIN, pp, w, 0.1, 0.9)
    assert result.terms_used == 1
    expected = math.sin(0.9) - (1.01 * math.sin(0.1)) / 1.81
    assert result.value == pytest.approx(expected, rel=1e-12)


def test_pfd_forms_agree():
    pp = PowerParams(0.3, 1.2, 2.0)
    series = pfd_series(SIN, pp, ONE, 0.0, 0.8)
    assert not series.finite_difference
    assert series.tail_estimate < 1e-14
    assert series.value == pytest.approx(pfd_quadrature(SIN, pp, ONE, 0.0, 0.8), abs=1e-8)


def test_finite_difference_fallback_is_flagged():
    pp = PowerParams(0.3, 1.2, 2.0)
    bare = ScalarFunction(np.sin, None, "sin")
    result = pfd_series(bare, pp, ONE, 0.0, 0.8)
    assert result.finite_difference
    assert result.value == pytest.approx(pfd_series(SIN, pp, ONE, 0.0, 0.8).value, abs=1e-7)


@given(st.floats(min_value=-2.0, max_value=2.0), st.floats(min_value=-2.0, max_value=2.0))
@settings(max_examples=15, deadline=None)
def test_operators_are_linear(c1, c2):
    pp = PowerParams(0.3, 0.7, 2.5)
    w = WeightFunction.exponential(0.5)
    q = QuadratureConfig(panels=16)
    combo = SIN.scaled(c1) + EXP.scaled(c2)
    for op in (lambda f: pfd_quadrature(f, pp, w, 0.0, 0.9, q),
               lambda f: pfi(f, pp, w, 0.0, 0.9, q),
               lambda f: rl_integral(f, w, 0.7, 0.0, 0.9, q)):
        assert op(combo) == pytest.approx(c1 * op(SIN) + c2 * op(EXP), abs=1e-10)


def test_pfi_reductions():
    t = 0.7
    assert pfi(SIN, PowerParams(0.0, 0.9, 3.0), ONE, 0.0, t) == pytest.approx(math.sin(t), rel=1e-15)
    pp = PowerParams(0.6, 0.9, 1.0)
    assert pfi(SIN, pp, ONE, 0.0, t) == pytest.approx(pp.chi * math.sin(t), rel=1e-15)
    pp = PowerParams(0.6, 0.9, 3.0)
    expected = pp.chi + pp.log_p * pp.phi * t ** 0.9 / gamma(1.9)
    assert pfi(constant(1.0), pp, ONE, 0.0, t) == pytest.approx(expected, rel=1e-11)


def test_iterated_pfi_small_orders():
    pp = PowerParams(0.4, 0.9, math.e)
    assert iterated_pfi(SIN, 0, pp, ONE, 0.0, 1.0) == pytest.approx(math.sin(1.0), rel=1e-15)
    assert iterated_pfi(SIN, 1, pp, ONE, 0.0, 1.0) == pytest.approx(pfi(SIN, pp, ONE, 0.0, 1.0), abs=1e-12)


def test_iterated_pfi_matches_naive_composition():
    pp = PowerParams(0.4, 0.9, math.e)
    f = parse_function("t^2")
    value = iterated_pfi(f, 3, pp, ONE, 0.0, 1.0)
    assert value == pytest.approx(naive_iterated_pfi(f, ONE, 3, 0.4, 0.9, math.e, 0.0, 1.0), abs=1e-6)


def test_composition_identity(sweep_q):
    pp = PowerParams(0.5, 1.5, 3.0)
    assert abs(compose_identity_residual(EXP, pp, ONE, 0.0, 1.0, sweep_q)) < 1e-6
    assert compose_identity_residual(constant(3.0), pp, ONE, 0.0, 1.0, sweep_q) == 0.0
    unit_power = PowerParams(0.5, 1.5, 1.0)
    w = WeightFunction.quadratic(1.0)
    assert abs(compose_identity_residual(SIN, unit_power, w, 0.0, 1.0, sweep_q)) < 1e-12


def test_pfd_function_composes(small_q):
    pp = PowerParams(0.3, 1.0, 2.0)
    g = pfd_function(SIN, pp, ONE, 0.0, small_q)
    np.testing.assert_allclose(g(np.array([[0.2, 0.4]]))[0],
                               pfd_quadrature_many(SIN, pp, ONE, 0.0, [0.2, 0.4], small_q), rtol=1e-15)
