"""Power Mittag-Leffler function

    pE_{k,l}(tau) = sum_n (tau ln p)^n / Gamma(k n + l)

summed term by term. Each term is obtained from the previous one through a Gamma
ratio, since Gamma(k n + l) overflows long before the term itself does. The sum
stops at the first term n+1 that is below the tolerance while the terms after it
keep shrinking (|z| Gamma(k(n+1)+l)/Gamma(k(n+2)+l) <= 1); the ratio decreases
in n, so from there on the terms decay monotonically.
"""
import math

import numpy as np
from loguru import logger

from consts import Consts
from util.errors import ConvergenceError, DomainError
from .gamma import gamma, gamma_ratio
from .series_result import SeriesResult


def _check_params(k, l, p, tol):
    if not (k > 0 and l > 0):
        raise DomainError(f"power_ml requires min(k, l) > 0, got k={k}, l={l}")
    if not p > 0:
        raise DomainError(f"power_ml requires p > 0, got p={p}")
    if not tol > 0:
        raise DomainError(f"power_ml requires tol > 0, got tol={tol}")


def _sum_series(k, l, z, tol, max_terms):
    """Sum the series for an array of scaled arguments z = tau ln p.

    Returns (values, terms_used, tail_estimate) arrays shaped like z.
    """
    z = np.asarray(z, dtype=float)
    abs_z = np.abs(z)
    term = np.full(z.shape, 1.0 / gamma(l))
    total = np.zeros(z.shape)
    terms_used = np.zeros(z.shape, dtype=int)
    tail = np.zeros(z.shape)
    active = np.ones(z.shape, dtype=bool)
    n = 0
    while True:
        total = np.where(active, total + term, total)
        terms_used[active] = n + 1
        nxt = term * z * gamma_ratio(k * n + l, k)
        shrinking = abs_z * gamma_ratio(k * (n + 1) + l, k) <= 1.0
        done = active & (np.abs(nxt) < tol) & shrinking
        tail[done] = np.abs(nxt[done])
        active &= ~done
        if not active.any():
            break
        n += 1
        if n >= max_terms:
            worst = float(abs_z[active].max())
            raise ConvergenceError(
                "power Mittag-Leffler series did not reach the tolerance",
                k=k, l=l, terms=max_terms, max_abs_argument=worst)
        term = nxt
    if not np.all(np.isfinite(total)):
        raise ConvergenceError("power Mittag-Leffler series overflowed", k=k, l=l)
    return total, terms_used, tail


def power_ml(k: float, l: float, p: float, tau: float, tol: float = Consts.series_tol,
             max_terms: int = Consts.max_terms) -> SeriesResult:
    _check_params(k, l, p, tol)
    z = float(tau) * math.log(p)
    values, terms_used, tail = _sum_series(k, l, np.array([z]), tol, max_terms)
    logger.debug("power_ml(k={}, l={}, p={}, tau={}): {} terms", k, l, p, tau, int(terms_used[0]))
    return SeriesResult(float(values[0]), int(terms_used[0]), float(tail[0]))


def power_ml_values(k: float, l: float, p: float, taus, tol: float = Consts.series_tol,
                    max_terms: int = Consts.max_terms) -> np.ndarray:
    """Vectorized power_ml; element-wise identical truncation, values only."""
    _check_params(k, l, p, tol)
    taus = np.asarray(taus, dtype=float)
    values, _, _ = _sum_series(k, l, taus * math.log(p), tol, max_terms)
    return values
