import math

import numpy as np
import pytest

from closedforms.examples import (example_approximant, example_remainder, find_remainder_lambda,
                                  liouville_check, max_errors)
from closedforms.lth_derivative import convergence_ratio, lth_derivative_series
from closedforms.registered import FunctionKind, RegisteredFunction, parse_registered
from operators.power_params import PowerParams
from taylor.weight_polynomial import weight_polynomial
from util.errors import ConvergenceError, DomainError

EXP = RegisteredFunction(FunctionKind.exp, 1.0)
COS = RegisteredFunction(FunctionKind.cos, 1.0)
SIN = RegisteredFunction(FunctionKind.sin, 1.0)
FIG = PowerParams(0.1, 1.5, 2.0)


def test_registered_validation():
    with pytest.raises(DomainError):
        RegisteredFunction(FunctionKind.exp, 0.0)
    with pytest.raises(DomainError):
        parse_registered("tan", 1.0)
    assert parse_registered("cos", 2.0) == RegisteredFunction(FunctionKind.cos, 2.0)


def test_phase_terms():
    t = np.array([0.3, 1.7])
    np.testing.assert_array_equal(COS.phase_term(0, 1.5, t), np.cos(t))
    np.testing.assert_array_equal(SIN.phase_term(0, 1.5, t), np.sin(t))
    for q in range(6):
        assert float(SIN.phase_term(q, 1.5, 0.0)) == pytest.approx(-math.sin(1.5 * q * math.pi / 2), abs=1e-15)


def test_as_function_derivative():
    f = RegisteredFunction(FunctionKind.sin, 2.0).as_function()
    assert f.derivative(np.array([0.5]))[0] == pytest.approx(2.0 * math.cos(1.0), rel=1e-15)


@pytest.mark.parametrize("g", [EXP, COS, SIN])
@pytest.mark.parametrize("l", [1, 2, 3])
def test_unit_power_collapses(g, l):
    pp = PowerParams(0.4, 1.5, 1.0)
    result = lth_derivative_series(g, l, pp, 0.7)
    assert result.terms_used == 1
    assert result.value == pytest.approx(float(g(0.7)) / pp.chi ** l, rel=1e-15)


def test_order_zero_is_the_function():
    assert lth_derivative_series(COS, 0, FIG, 0.4).value == pytest.approx(math.cos(0.4), rel=1e-15)


def test_exp_first_order_geometric_sum():
    pp = PowerParams(0.3, 1.5, 2.0)
    expected = math.exp(0.5) / (pp.chi * (1.0 + pp.mu * pp.log_p))
    result = lth_derivative_series(EXP, 1, pp, 0.5)
    assert result.value == pytest.approx(expected, rel=1e-13)
    assert result.tail_estimate < 1e-14


def test_higher_order_negative_binomial():
    # sum_q C(q+l-1, l-1) r^q = (1 - r)^(-l)
    pp = PowerParams(0.3, 1.5, 2.0)
    r = -pp.mu * pp.log_p
    result = lth_derivative_series(EXP, 3, pp, 0.0)
    assert result.value == pytest.approx((1.0 - r) ** -3 / pp.chi ** 3, rel=1e-13)


def test_divergent_parameters_are_rejected():
    pp = PowerParams(0.9, 1.0, math.e)
    assert convergence_ratio(EXP, pp) == pytest.approx(9.0)
    with pytest.raises(ConvergenceError) as info:
        lth_derivative_series(EXP, 1, pp, 0.5)
    assert info.value.context["ratio"] == pytest.approx(9.0)
    assert info.value.context["l"] == 1


def test_far_left_lower_limit_agrees_with_closed_form():
    check = liouville_check(EXP, PowerParams(0.3, 1.5, 2.0), 0.5)
    assert check.discrepancy < 1e-3


def test_example_approximant_order_zero():
    assert example_approximant(SIN, 0, FIG, 0.6) == 0.0
    assert example_approximant(COS, 0, FIG, 0.6) == 1.0
    assert example_approximant(EXP, 0, FIG, 0.6) == 1.0


def test_example_approximant_at_origin():
    expected = sum(lth_derivative_series(COS, l, FIG, 0.0).value * FIG.chi ** l for l in range(4))
    assert example_approximant(COS, 3, FIG, 0.0) == pytest.approx(expected, rel=1e-14)


def test_example_remainder_with_unit_power():
    pp = PowerParams(0.1, 1.5, 1.0)
    assert example_remainder(COS, 2, pp, 0.8, 0.3) == pytest.approx(math.cos(0.3), rel=1e-14)
    assert example_remainder(EXP, 0, FIG, 0.0, 0.0) == pytest.approx(
        lth_derivative_series(EXP, 1, FIG, 0.0).value * weight_polynomial(1, FIG, 0.0), rel=1e-15)


def test_remainder_point_for_sin_with_unit_power():
    root = find_remainder_lambda(SIN, 1, PowerParams(0.1, 1.5, 1.0), 0.5)
    assert abs(root.residual) < 1e-8


def test_second_order_improves_on_first():
    errors = max_errors(SIN, [1, 2], FIG)
    assert errors[2] < errors[1]


@pytest.mark.parametrize("order", [0, 1, 2])
def test_sin_remainder_balances_away_from_unit_power(order):
    root = find_remainder_lambda(SIN, order, FIG, 0.5)
    assert root.bracketed
    assert 0.0 <= root.lam <= 0.5
    assert abs(root.residual) < 1e-6
