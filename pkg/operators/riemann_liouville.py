"""Weighted Riemann-Liouville integral

    RL^beta_w f(t) = 1/Gamma(beta) * 1/w(t) * int_a^t (t-tau)^(beta-1) w(tau) f(tau) dtau
"""
import numpy as np

from specfun.gamma import gamma
from util.errors import DomainError, require
from .functions import ScalarFunction, WeightFunction
from .quadrature import QuadratureConfig, endpoint_quadrature


def check_upper_limits(a: float, ts) -> np.ndarray:
    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    if np.any(ts < a):
        raise DomainError(f"constraint violated: t >= a (a={a}, t={float(ts[ts < a][0])})")
    return ts


def rl_integral_many(f: ScalarFunction, w: WeightFunction, beta: float, a: float, ts,
                     q: QuadratureConfig) -> np.ndarray:
    require(beta > 0, f"beta > 0 (beta={beta})")
    ts = check_upper_limits(a, ts)

    def integrand(tau, s):
        return s ** (beta - 1.0) * w.checked(tau) * f(tau)

    integral = endpoint_quadrature(integrand, a, ts, q, order=beta)
    return integral / (gamma(beta) * w.checked(ts))


def rl_integral(f: ScalarFunction, w: WeightFunction, beta: float, a: float, t: float,
                q: QuadratureConfig = QuadratureConfig()) -> float:
    return float(rl_integral_many(f, w, beta, a, [t], q)[0])
