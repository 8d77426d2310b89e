import math

import numpy as np
import pytest

from operators.functions import WeightFunction, parse_function
from operators.iterated_derivative import grid_for, iterated_pfd, tabulate_iterated_pfd
from operators.power_derivative import pfd_quadrature
from operators.power_params import PowerParams
from operators.quadrature import QuadratureConfig
from util.errors import ResolutionError

ONE = WeightFunction.unit()
SIN = parse_function("sin")
T = parse_function("t")
CF_HALF = PowerParams(0.5, 1.0, math.e)


def test_order_zero_and_one():
    pp = PowerParams(0.3, 0.8, 2.0)
    assert iterated_pfd(SIN, 0, pp, ONE, 0.0, 0.6) == pytest.approx(math.sin(0.6), rel=1e-15)
    assert iterated_pfd(SIN, 1, pp, ONE, 0.0, 0.6) == pfd_quadrature(SIN, pp, ONE, 0.0, 0.6)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_vanishes_at_base(n):
    assert iterated_pfd(SIN, n, PowerParams(0.3, 0.8, 2.0), ONE, 0.4, 0.4) == 0.0


def test_grid_has_odd_count():
    grid = grid_for(0.0, 0.5, QuadratureConfig(grid_density=100))
    assert len(grid) == 51
    assert grid[0] == 0.0 and grid[-1] == 0.5
    assert len(grid_for(0.0, 0.01, QuadratureConfig(grid_density=100))) == 9


def test_unit_power_divides_by_chi(small_q):
    pp = PowerParams(0.5, 1.0, 1.0)
    assert iterated_pfd(SIN, 2, pp, ONE, 0.0, 1.0, small_q) == pytest.approx(math.sin(1.0) / 0.25, rel=1e-12)


def test_caputo_fabrizio_iterates(small_q):
    # pD^2 t = t e^(-t) / chi^2 and pD^3 t = e^(-t) (t - t^2/2) / chi^3 for mu = 1
    table = tabulate_iterated_pfd(T, 3, CF_HALF, ONE, 0.0, 1.0, small_q)
    assert table.order == 3
    assert table.levels[1][-1] == pytest.approx(4.0 * math.exp(-1.0), abs=1e-6)
    assert table.levels[2][-1] == pytest.approx(8.0 * 0.5 * math.exp(-1.0), abs=1e-6)
    assert all(e <= 1e-6 for e in table.estimates)
    assert iterated_pfd(T, 2, CF_HALF, ONE, 0.0, 0.5, small_q) == pytest.approx(4.0 * 0.5 * math.exp(-0.5), abs=1e-6)


def test_tabulated_levels_vanish_at_base(small_q):
    table = tabulate_iterated_pfd(SIN, 2, PowerParams(0.4, 1.0, math.e), WeightFunction.exponential(1.0),
                                  0.0, 0.5, small_q)
    assert table.levels[0][0] == 0.0
    assert table.levels[1][0] == 0.0
    spline = table.as_function(2)
    np.testing.assert_allclose(spline(table.grid), table.levels[1], atol=1e-12)


def test_coarse_grid_is_reported():
    coarse = QuadratureConfig(panels=32, grid_density=2)
    with pytest.raises(ResolutionError) as info:
        iterated_pfd(SIN, 2, CF_HALF, ONE, 0.0, 1.0, coarse, tol=1e-14)
    assert info.value.level == 2
    assert info.value.estimate > 1e-14
