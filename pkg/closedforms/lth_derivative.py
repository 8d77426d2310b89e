"""Closed-form l-th power fractional derivative of exp, cos and sin (Liouville convention)

    pD^l g(t) = 1/chi^l * sum_q C(q+l-1, l-1) r^q phase_q(t),   r = -mu ln p delta^(-beta)

The binomial is carried as an exact integer and updated in place,
C(q+l, l-1) = C(q+l-1, l-1) (q+l) / (q+1).
"""
from loguru import logger

from consts import Consts
from operators.power_params import PowerParams
from specfun.series_result import SeriesResult
from util.errors import ConvergenceError, require
from .registered import RegisteredFunction


def convergence_ratio(g: RegisteredFunction, pp: PowerParams) -> float:
    """|mu ln p| delta^(-beta), the limit of successive term ratios."""
    return abs(pp.series_ratio) * g.delta ** (-pp.beta)


def lth_derivative_series(g: RegisteredFunction, l: int, pp: PowerParams, t: float,
                          tol: float = Consts.series_tol, max_terms: int = Consts.max_terms) -> SeriesResult:
    require(l >= 0, f"l >= 0 (l={l})")
    require(tol > 0, f"tol > 0 (tol={tol})")
    if l == 0:
        return SeriesResult(float(g(t)), 1, 0.0)
    scale = pp.chi ** l
    r = pp.series_ratio * g.delta ** (-pp.beta)
    if r == 0.0:
        return SeriesResult(float(g(t)) / scale, 1, 0.0)
    ratio = abs(r)
    if ratio >= 1.0:
        raise ConvergenceError("closed-form derivative series does not converge", l=l, q=0, ratio=ratio)
    bound = g.magnitude_bound(t)
    binom = 1
    total = 0.0
    q = 0
    while True:
        total += binom * r ** q * float(g.phase_term(q, pp.beta, t))
        binom = binom * (q + l) // (q + 1)
        q += 1
        next_bound = binom * ratio ** q * bound
        # from here on the bounds decrease: ratio (q+l)/(q+1) <= 1
        if next_bound < tol and ratio * (q + l) <= q + 1:
            break
        if q >= max_terms:
            raise ConvergenceError("closed-form derivative series did not reach the tolerance",
                                   l=l, q=q, ratio=ratio)
    tail = abs(binom * r ** q * float(g.phase_term(q, pp.beta, t)))
    logger.debug("{} l={} {}: {} terms", g.name, l, pp.describe(), q)
    return SeriesResult(total / scale, q, tail)
