"""Taylor approximants of exp, cos and sin about 0 with closed-form derivative values
(unit weight), their remainders, and the cross-check of the closed forms against
the operator with a far-left lower limit.
"""
from dataclasses import dataclass
from typing import Dict, List, Sequence

import numpy as np
from loguru import logger

from consts import Consts
from operators.functions import WeightFunction
from operators.power_derivative import pfd_quadrature
from operators.power_params import PowerParams
from operators.quadrature import QuadratureConfig
from taylor.lambda_search import LambdaRoot, find_lambda
from taylor.weight_polynomial import weight_polynomial_values
from util.errors import require
from .lth_derivative import lth_derivative_series
from .registered import RegisteredFunction


def derivatives_at_zero(g: RegisteredFunction, n: int, pp: PowerParams, tol: float = Consts.series_tol) -> List[float]:
    return [lth_derivative_series(g, l, pp, 0.0, tol).value for l in range(n + 1)]


def example_approximant_values(g: RegisteredFunction, n: int, pp: PowerParams, ts,
                               tol: float = Consts.series_tol) -> np.ndarray:
    require(n >= 0, f"n >= 0 (n={n})")
    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    require(bool(np.all(ts >= 0.0)), "t >= 0")
    total = np.zeros_like(ts)
    for l, d in enumerate(derivatives_at_zero(g, n, pp, tol)):
        total = total + d * weight_polynomial_values(l, pp, ts)
    return total


def example_approximant(g: RegisteredFunction, n: int, pp: PowerParams, t: float,
                        tol: float = Consts.series_tol) -> float:
    return float(example_approximant_values(g, n, pp, [t], tol)[0])


def example_remainder(g: RegisteredFunction, N: int, pp: PowerParams, t: float, lam: float,
                      tol: float = Consts.series_tol) -> float:
    require(0.0 <= lam <= t, f"0 <= lambda <= t (t={t}, lambda={lam})")
    derivative = lth_derivative_series(g, N + 1, pp, lam, tol).value
    return float(derivative * weight_polynomial_values(N + 1, pp, [t])[0])


def remainder_mismatch(g: RegisteredFunction, N: int, pp: PowerParams, t: float, lams,
                       tol: float = Consts.series_tol) -> np.ndarray:
    """g(t) - A_N(t) - R_N(lambda) for each lambda."""
    gap = float(g(t)) - example_approximant(g, N, pp, t, tol)
    return np.array([gap - example_remainder(g, N, pp, t, lam, tol) for lam in np.atleast_1d(lams)])


def find_remainder_lambda(g: RegisteredFunction, N: int, pp: PowerParams, t: float,
                          tol: float = Consts.series_tol) -> LambdaRoot:
    return find_lambda(lambda lams: remainder_mismatch(g, N, pp, t, lams, tol), 0.0, t)


@dataclass(frozen=True)
class LiouvilleCheck:
    closed_form: float
    far_left: float

    @property
    def discrepancy(self) -> float:
        return abs(self.closed_form - self.far_left)


def liouville_check(g: RegisteredFunction, pp: PowerParams, t: float, q: QuadratureConfig = QuadratureConfig(),
                    lower: float = Consts.far_left_limit, tol: float = Consts.series_tol) -> LiouvilleCheck:
    """First derivative by closed form against the operator started at a far-left `lower`."""
    closed = lth_derivative_series(g, 1, pp, t, tol).value
    surrogate = pfd_quadrature(g.as_function(), pp, WeightFunction.unit(), lower, t, q, tol)
    check = LiouvilleCheck(closed, surrogate)
    logger.debug("{} {}: closed form {} vs lower limit {} -> {:.3e}",
                 g.name, pp.describe(), closed, lower, check.discrepancy)
    return check


def taylor_curves(g: RegisteredFunction, orders: Sequence[int], pp: PowerParams, ts,
                  tol: float = Consts.series_tol) -> Dict[int, np.ndarray]:
    return {n: example_approximant_values(g, n, pp, ts, tol) for n in orders}


def max_errors(g: RegisteredFunction, orders: Sequence[int], pp: PowerParams, t_max: float = 0.5,
               points: int = 101, tol: float = Consts.series_tol) -> Dict[int, float]:
    """max |A_n - g| on [0, t_max] for each order."""
    ts = np.linspace(0.0, t_max, points)
    exact = g(ts)
    return {n: float(np.max(np.abs(curve - exact))) for n, curve in taylor_curves(g, orders, pp, ts, tol).items()}
