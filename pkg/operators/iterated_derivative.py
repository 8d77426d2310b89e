"""n-fold power fractional derivative.

The first level is the quadrature form on a uniform grid over [a, t]. Every later
level needs (w D_k)' which is never differentiated numerically; the kernel is
moved onto the tabulated values H = w D_k instead:

    int_a^t E(-mu s^b) H'(tau) dtau = H(t) - E(-mu T^b) H(a)
                                      - mu ln p int_a^t s^(b-1) pE_{b,b}(-mu s^b) H(tau) dtau

with s = t - tau, T = t - a, and H represented by a cubic spline.
"""
import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from loguru import logger
from scipy.interpolate import CubicSpline

from consts import Consts
from specfun.mittag_leffler import power_ml_values
from util.errors import ResolutionError, require
from .functions import ScalarFunction, WeightFunction
from .power_derivative import ml_kernel, pfd_quadrature, pfd_quadrature_many
from .power_params import PowerParams
from .quadrature import QuadratureConfig, endpoint_quadrature
from .riemann_liouville import check_upper_limits

_ROWS = 128


@dataclass(frozen=True)
class Tabulation:
    """Levels D^1 .. D^n of the derivative on a shared uniform grid."""
    grid: np.ndarray
    levels: Tuple[np.ndarray, ...]
    # grid-halving estimate of each level transition (level 2 onwards)
    estimates: Tuple[float, ...]

    @property
    def order(self) -> int:
        return len(self.levels)

    def spline(self, level: int) -> CubicSpline:
        require(1 <= level <= self.order, f"1 <= level <= {self.order} (level={level})")
        return CubicSpline(self.grid, self.levels[level - 1])

    def as_function(self, level: int, name: str = "f") -> ScalarFunction:
        spline = self.spline(level)
        return ScalarFunction(spline, spline.derivative(), f"pD^{level}[{name}]")


def grid_for(a: float, t: float, q: QuadratureConfig) -> np.ndarray:
    count = max(9, math.ceil(q.grid_density * (t - a)))
    if count % 2 == 0:
        count += 1
    return np.linspace(a, t, count)


def _next_level(h: CubicSpline, h_at_a: float, pp: PowerParams, w: WeightFunction, a: float, ts,
                q: QuadratureConfig, tol: float) -> np.ndarray:
    """pD applied to H/w given only values of H = w D_k."""
    ts = np.asarray(ts, dtype=float)
    rate = pp.mu * pp.log_p

    def integrand(tau, s):
        return s ** (pp.beta - 1.0) * power_ml_values(pp.beta, pp.beta, pp.p, -pp.mu * s ** pp.beta, tol) * h(tau)

    out = np.empty_like(ts)
    for start in range(0, len(ts), _ROWS):
        chunk = ts[start:start + _ROWS]
        boundary = h(chunk) - ml_kernel(pp, chunk - a, tol) * h_at_a
        if rate != 0.0:
            boundary = boundary - rate * endpoint_quadrature(integrand, a, chunk, q, order=pp.beta)
        out[start:start + _ROWS] = boundary
    return out / (pp.chi * w.checked(ts))


def tabulate_iterated_pfd(f: ScalarFunction, n: int, pp: PowerParams, w: WeightFunction, a: float,
                          t: float, q: QuadratureConfig = QuadratureConfig(),
                          tol: float = Consts.resolution_tol) -> Tabulation:
    require(n >= 1, f"n >= 1 (n={n})")
    require(t > a, f"t > a (a={a}, t={t})")
    kernel_tol = min(tol, Consts.series_tol)
    grid = grid_for(a, t, q)
    omega = w.checked(grid)
    logger.debug("tabulating pD^{} {} on {} points over [{}, {}]", n, pp.describe(), len(grid), a, t)
    levels: List[np.ndarray] = [pfd_quadrature_many(f, pp, w, a, grid, q, kernel_tol)]
    estimates: List[float] = []
    for level in range(2, n + 1):
        h_values = omega * levels[-1]
        fine = CubicSpline(grid, h_values)
        coarse = CubicSpline(grid[::2], h_values[::2])
        values = _next_level(fine, h_values[0], pp, w, a, grid, q, kernel_tol)
        halved = _next_level(coarse, h_values[0], pp, w, a, grid[-1:], q, kernel_tol)[0]
        estimate = abs(halved - values[-1])
        logger.debug("level {}: grid-halving estimate {:.3e}", level, estimate)
        if estimate > tol:
            raise ResolutionError("iterated derivative grid too coarse; raise the grid density",
                                  estimate=estimate, level=level)
        estimates.append(estimate)
        levels.append(values)
    return Tabulation(grid, tuple(levels), tuple(estimates))


def iterated_pfd(f: ScalarFunction, n: int, pp: PowerParams, w: WeightFunction, a: float, t: float,
                 q: QuadratureConfig = QuadratureConfig(), tol: float = Consts.resolution_tol) -> float:
    """pD^n f(t); exactly 0 at t = a for n >= 1."""
    require(n >= 0, f"n >= 0 (n={n})")
    check_upper_limits(a, [t])
    if n == 0:
        return float(f([t])[0])
    if t == a:
        return 0.0
    if n == 1:
        return pfd_quadrature(f, pp, w, a, t, q, min(tol, Consts.series_tol))
    return float(tabulate_iterated_pfd(f, n, pp, w, a, t, q, tol).levels[-1][-1])
