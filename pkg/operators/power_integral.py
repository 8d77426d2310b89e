"""Power fractional integral

    pI f(t) = chi f(t) + ln p * phi * RL^beta_w f(t)

its n-fold iterate, and the residual of the composition identity
pI(pD f)(t) = f(t) - w(a) f(a) / w(t).
"""
import numpy as np
from loguru import logger
from scipy import special

from consts import Consts
from util.errors import require
from .functions import ScalarFunction, WeightFunction
from .power_derivative import pfd_function
from .power_params import PowerParams
from .quadrature import QuadratureConfig
from .riemann_liouville import check_upper_limits, rl_integral_many


def pfi_many(f: ScalarFunction, pp: PowerParams, w: WeightFunction, a: float, ts,
             q: QuadratureConfig) -> np.ndarray:
    ts = check_upper_limits(a, ts)
    value = pp.chi * f(ts)
    if pp.integral_coefficient != 0.0:
        value = value + pp.integral_coefficient * rl_integral_many(f, w, pp.beta, a, ts, q)
    return value


def pfi(f: ScalarFunction, pp: PowerParams, w: WeightFunction, a: float, t: float,
        q: QuadratureConfig = QuadratureConfig()) -> float:
    return float(pfi_many(f, pp, w, a, [t], q)[0])


def iterated_pfi_many(f: ScalarFunction, n: int, pp: PowerParams, w: WeightFunction, a: float, ts,
                      q: QuadratureConfig) -> np.ndarray:
    """n-fold integral through the binomial expansion

        pI^n f = sum_m C(n, m) chi^(n-m) (ln p phi)^m RL^(beta m)_w f

    with the m = 0 term read as f itself.
    """
    require(n >= 0, f"n >= 0 (n={n})")
    ts = check_upper_limits(a, ts)
    total = pp.chi ** n * f(ts)
    lam = pp.integral_coefficient
    if lam == 0.0:
        return total
    for m in range(1, n + 1):
        coeff = float(special.comb(n, m, exact=True)) * pp.chi ** (n - m) * lam ** m
        total = total + coeff * rl_integral_many(f, w, pp.beta * m, a, ts, q)
    return total


def iterated_pfi(f: ScalarFunction, n: int, pp: PowerParams, w: WeightFunction, a: float, t: float,
                 q: QuadratureConfig = QuadratureConfig()) -> float:
    return float(iterated_pfi_many(f, n, pp, w, a, [t], q)[0])


def compose_identity_residual(f: ScalarFunction, pp: PowerParams, w: WeightFunction, a: float,
                              t: float, q: QuadratureConfig = QuadratureConfig(),
                              tol: float = Consts.series_tol) -> float:
    """pI(pD f)(t) - (f(t) - w(a) f(a) / w(t))."""
    check_upper_limits(a, [t])
    composed = pfi(pfd_function(f, pp, w, a, q, tol), pp, w, a, t, q)
    ends = w.checked([a, t])
    target = float(f([t])[0]) - float(ends[0] * f([a])[0] / ends[1])
    residual = composed - target
    logger.debug("composition residual {} at t={}: {:.3e}", pp.describe(), t, residual)
    return residual
