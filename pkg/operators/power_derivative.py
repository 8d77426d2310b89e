"""Power fractional derivative (Caputo sense, weighted)

    pD f(t) = 1/chi * 1/w(t) * int_a^t pE_{beta,1}(-mu (t-tau)^beta) (w f)'(tau) dtau

in two independent forms: direct quadrature of the Mittag-Leffler kernel, and the
series of weighted RL integrals of orders beta*n + 1 of (w f)'/w.
"""
import math

import numpy as np
from loguru import logger
from scipy import special

from consts import Consts
from specfun.mittag_leffler import power_ml_values
from specfun.series_result import SeriesResult
from util.errors import ConvergenceError
from .functions import ScalarFunction, WeightFunction
from .power_params import PowerParams
from .quadrature import QuadratureConfig, endpoint_quadrature
from .riemann_liouville import check_upper_limits

# upper limits handled per block, bounds the (rows x nodes) temporaries
_ROWS = 128


def weighted_derivative(f: ScalarFunction, w: WeightFunction, tau) -> np.ndarray:
    """(w f)' = w' f + w f'."""
    return w.derivative(tau) * f(tau) + w.checked(tau) * f.derivative(tau)


def _warn_fallback(f: ScalarFunction, w: WeightFunction) -> bool:
    fallback = f.finite_difference or w.finite_difference
    if fallback:
        logger.warning("{} / {}: no analytic derivative, using central differences", f.name, w.name)
    return fallback


def ml_kernel(pp: PowerParams, s, tol: float) -> np.ndarray:
    return power_ml_values(pp.beta, 1.0, pp.p, -pp.mu * np.asarray(s) ** pp.beta, tol)


def pfd_quadrature_many(f: ScalarFunction, pp: PowerParams, w: WeightFunction, a: float, ts,
                        q: QuadratureConfig, tol: float = Consts.series_tol) -> np.ndarray:
    ts = check_upper_limits(a, ts)
    omega_t = w.checked(ts)

    def integrand(tau, s):
        return ml_kernel(pp, s, tol) * weighted_derivative(f, w, tau)

    out = np.empty_like(ts)
    for start in range(0, len(ts), _ROWS):
        out[start:start + _ROWS] = endpoint_quadrature(integrand, a, ts[start:start + _ROWS], q,
                                                       order=pp.beta)
    return out / (pp.chi * omega_t)


def pfd_quadrature(f: ScalarFunction, pp: PowerParams, w: WeightFunction, a: float, t: float,
                   q: QuadratureConfig = QuadratureConfig(), tol: float = Consts.series_tol) -> float:
    _warn_fallback(f, w)
    return float(pfd_quadrature_many(f, pp, w, a, [t], q, tol)[0])


def pfd_function(f: ScalarFunction, pp: PowerParams, w: WeightFunction, a: float,
                 q: QuadratureConfig, tol: float = Consts.series_tol) -> ScalarFunction:
    """The derivative pD f as a function of its upper limit, for composing operators."""

    def values(x):
        x = np.asarray(x, dtype=float)
        return pfd_quadrature_many(f, pp, w, a, x.ravel(), q, tol).reshape(x.shape)

    return ScalarFunction(values, None, f"pD[{f.name}]")


def pfd_series(f: ScalarFunction, pp: PowerParams, w: WeightFunction, a: float, t: float,
               q: QuadratureConfig = QuadratureConfig(), tol: float = Consts.series_tol,
               max_terms: int = Consts.max_terms) -> SeriesResult:
    """Series form: 1/chi * sum_n (-mu ln p)^n RL^{beta n + 1}_w[(w f)'/w](t).

    Stops once the a-priori bound |ratio|^n T^(beta n + 1) / Gamma(beta n + 2) * max|(w f)'| / w(t)
    of the next term is below tol and still shrinking; the first omitted term itself
    is reported as the tail estimate.
    """
    fallback = _warn_fallback(f, w)
    check_upper_limits(a, [t])
    if t == a:
        return SeriesResult(0.0, 1, 0.0, fallback)
    omega_t = float(w.checked([t])[0])
    span = t - a
    ratio = pp.series_ratio
    beta = pp.beta
    g_max = [0.0]

    def rl_term(n: int) -> float:
        order = beta * n + 1.0

        def integrand(tau, s):
            g = weighted_derivative(f, w, tau)
            g_max[0] = max(g_max[0], float(np.max(np.abs(g))))
            return s ** (order - 1.0) * g

        integral = float(endpoint_quadrature(integrand, a, [t], q, order=order)[0])
        if n == 0:
            return integral / omega_t
        coeff = math.copysign(1.0, ratio) ** n * math.exp(n * math.log(abs(ratio)) - special.gammaln(order))
        return coeff * integral / omega_t

    def bound(n: int) -> float:
        if ratio == 0.0:
            return 0.0
        log_b = (n * math.log(abs(ratio)) + (beta * n + 1.0) * math.log(span)
                 - special.gammaln(beta * n + 2.0))
        return math.exp(log_b) * g_max[0] / omega_t

    total = rl_term(0)
    n = 0
    while True:
        n += 1
        nxt = 0.0 if ratio == 0.0 else rl_term(n)
        if abs(nxt) < tol and bound(n) < tol and bound(n + 1) <= bound(n):
            break
        if n >= max_terms:
            raise ConvergenceError("power fractional derivative series did not reach the tolerance",
                                   terms=max_terms, ratio=ratio)
        total += nxt
    logger.debug("pfd_series {} at t={}: {} terms", pp.describe(), t, n)
    return SeriesResult(total / pp.chi, n, abs(nxt), fallback)
