"""Mean value residual and the telescoping identity behind the Taylor formula."""
import numpy as np
from loguru import logger

from consts import Consts
from operators.functions import ScalarFunction, WeightFunction
from operators.iterated_derivative import iterated_pfd, tabulate_iterated_pfd
from operators.power_derivative import pfd_function, pfd_quadrature_many
from operators.power_integral import iterated_pfi
from operators.power_params import PowerParams
from operators.quadrature import QuadratureConfig
from operators.riemann_liouville import check_upper_limits
from util.errors import require
from .lambda_search import LambdaRoot, find_lambda
from .weight_polynomial import weight_polynomial


def mvt_residual_many(f: ScalarFunction, pp: PowerParams, w: WeightFunction, a: float, t: float, lams,
                      q: QuadratureConfig = QuadratureConfig(), tol: float = Consts.series_tol) -> np.ndarray:
    """f(t) - (w(a) f(a) + w(lambda) pD f(lambda) W_1(t - a)) / w(t) for each lambda."""
    check_upper_limits(a, [t])
    lams = np.atleast_1d(np.asarray(lams, dtype=float))
    require(bool(np.all((lams >= a) & (lams <= t))), f"a <= lambda <= t (a={a}, t={t})")
    ends = w.checked([a, t])
    fa, ft = f([a, t])
    derivative = pfd_quadrature_many(f, pp, w, a, lams, q, tol)
    spread = w.checked(lams) * derivative * weight_polynomial(1, pp, t - a)
    return ft - (ends[0] * fa + spread) / ends[1]


def mvt_residual(f: ScalarFunction, pp: PowerParams, w: WeightFunction, a: float, t: float, lam: float,
                 q: QuadratureConfig = QuadratureConfig(), tol: float = Consts.series_tol) -> float:
    return float(mvt_residual_many(f, pp, w, a, t, [lam], q, tol)[0])


def find_mvt_lambda(f: ScalarFunction, pp: PowerParams, w: WeightFunction, a: float, t: float,
                    q: QuadratureConfig = QuadratureConfig(), tol: float = Consts.series_tol) -> LambdaRoot:
    root = find_lambda(lambda lams: mvt_residual_many(f, pp, w, a, t, lams, q, tol), a, t)
    logger.debug("mean value point for {} {}: lambda={} residual={:.3e} bracketed={}",
                 f.name, pp.describe(), root.lam, root.residual, root.bracketed)
    return root


def telescoping_check(f: ScalarFunction, n: int, pp: PowerParams, w: WeightFunction, a: float, t: float,
                      q: QuadratureConfig = QuadratureConfig(), tol: float = Consts.resolution_tol) -> float:
    """[pI^n pD^n f - pI^(n+1) pD^(n+1) f](t) - w(a)/w(t) pD^n f(a) W_n(t - a).

    pD^1 is applied exactly at every quadrature node; deeper levels come from the
    tabulated derivative.
    """
    require(n >= 0, f"n >= 0 (n={n})")
    check_upper_limits(a, [t])
    if t == a:
        return 0.0
    kernel_tol = min(tol, Consts.series_tol)
    table = tabulate_iterated_pfd(f, n + 1, pp, w, a, t, q, tol) if n >= 1 else None

    def level(k: int) -> ScalarFunction:
        if k == 0:
            return f
        if k == 1:
            return pfd_function(f, pp, w, a, q, kernel_tol)
        return table.as_function(k, f.name)

    lhs = iterated_pfi(level(n), n, pp, w, a, t, q) - iterated_pfi(level(n + 1), n + 1, pp, w, a, t, q)
    ends = w.checked([a, t])
    base_value = iterated_pfd(f, n, pp, w, a, a, q, tol)
    rhs = ends[0] / ends[1] * base_value * weight_polynomial(n, pp, t - a)
    return float(lhs - rhs)
