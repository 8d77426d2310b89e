"""Locate an intermediate point lambda in [lo, hi] where a residual vanishes.

A uniform scan looks for the first sign change; bisection then refines that
bracket. Without a sign change the scan point of smallest magnitude is returned,
flagged as not bracketed.
"""
from dataclasses import dataclass
from typing import Callable

import numpy as np
from loguru import logger
from scipy import optimize

from consts import Consts
from util.errors import require


@dataclass(frozen=True)
class LambdaRoot:
    lam: float
    residual: float
    bracketed: bool


def find_lambda(residuals: Callable[[np.ndarray], np.ndarray], lo: float, hi: float,
                points: int = Consts.lambda_scan_points, xtol: float = Consts.lambda_xtol) -> LambdaRoot:
    """`residuals` maps an array of lambdas to an array of residuals."""
    require(hi >= lo, f"lo <= hi (lo={lo}, hi={hi})")
    require(points >= 2, f"points >= 2 (points={points})")
    xs = np.linspace(lo, hi, points)
    values = np.asarray(residuals(xs), dtype=float)
    zeros = np.flatnonzero(values == 0.0)
    if zeros.size:
        i = int(zeros[0])
        return LambdaRoot(float(xs[i]), 0.0, True)
    changes = np.flatnonzero(np.sign(values[:-1]) * np.sign(values[1:]) < 0)
    if not changes.size:
        i = int(np.argmin(np.abs(values)))
        logger.debug("no sign change on [{}, {}]; closest residual {:.3e}", lo, hi, values[i])
        return LambdaRoot(float(xs[i]), float(values[i]), False)
    i = int(changes[0])

    def scalar(x):
        return float(np.asarray(residuals(np.array([x])))[0])

    lam = optimize.bisect(scalar, xs[i], xs[i + 1], xtol=xtol)
    return LambdaRoot(float(lam), scalar(lam), True)
