"""Generalized Taylor approximant

    A_n(t) = w(a)/w(t) * sum_{l=0}^{n} pD^l f(a) W_l(t - a)

and its remainder R_N(lambda) = w(lambda) pD^(N+1) f(lambda) W_(N+1)(t - a) / w(t).

Values of the derivative at the base point come from an explicit source. Under the
operator definition (numeric) they vanish for l >= 1; the closed forms for the
registered exp/cos/sin functions do not.
"""
import enum
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger

from closedforms.lth_derivative import lth_derivative_series
from closedforms.registered import RegisteredFunction
from consts import Consts
from operators.functions import ScalarFunction, WeightFunction
from operators.iterated_derivative import iterated_pfd, tabulate_iterated_pfd
from operators.power_params import PowerParams
from operators.quadrature import QuadratureConfig
from util.errors import DerivativeUnavailableError, DomainError, require
from .weight_polynomial import weight_polynomial_values

Expandable = Union[ScalarFunction, RegisteredFunction]


class DerivativeSource(enum.Enum):
    closed_form = "closed_form"
    numeric = "numeric"
    user_supplied = "user_supplied"


@dataclass(frozen=True)
class TaylorApproximant:
    base_point: float
    order: int
    params: PowerParams
    weight: WeightFunction
    # pD^l f(a) for l = 0..order
    derivs_at_base: Tuple[float, ...]
    deriv_source: DerivativeSource

    def __post_init__(self):
        require(self.order >= 0, f"n >= 0 (n={self.order})")
        require(len(self.derivs_at_base) == self.order + 1,
                f"n+1 derivative values (n={self.order}, got {len(self.derivs_at_base)})")
        if self.deriv_source is DerivativeSource.numeric:
            require(all(d == 0.0 for d in self.derivs_at_base[1:]),
                    "numeric derivatives vanish at the base point for l >= 1")

    def values(self, ts) -> np.ndarray:
        ts = np.atleast_1d(np.asarray(ts, dtype=float))
        require(bool(np.all(ts >= self.base_point)), f"t >= a (a={self.base_point})")
        dts = ts - self.base_point
        total = np.zeros_like(ts)
        for l, d in enumerate(self.derivs_at_base):
            if d != 0.0:
                total = total + d * weight_polynomial_values(l, self.params, dts)
        w = self.weight.checked(np.concatenate([[self.base_point], ts]))
        return w[0] * total / w[1:]

    def __call__(self, t: float) -> float:
        return float(self.values([t])[0])


def _scalar(f: Expandable) -> ScalarFunction:
    return f.as_function() if isinstance(f, RegisteredFunction) else f


def _closed_form_target(f: Expandable, w: WeightFunction) -> RegisteredFunction:
    if not isinstance(f, RegisteredFunction):
        raise DerivativeUnavailableError(f"no closed-form derivatives for {f.name}; "
                                         f"registered: exp, cos, sin")
    if not w.is_unit:
        raise DerivativeUnavailableError(f"closed-form derivatives assume the unit weight, got {w.name}")
    return f


def build_approximant(f: Expandable, n: int, pp: PowerParams, w: WeightFunction, a: float,
                      deriv_source: DerivativeSource, *, derivatives: Optional[Sequence[float]] = None,
                      q: QuadratureConfig = QuadratureConfig(), tol: float = Consts.series_tol) -> TaylorApproximant:
    require(n >= 0, f"n >= 0 (n={n})")
    fa = float(_scalar(f)([a])[0])
    if deriv_source is DerivativeSource.closed_form:
        g = _closed_form_target(f, w)
        derivs = [fa] + [lth_derivative_series(g, l, pp, a, tol).value for l in range(1, n + 1)]
    elif deriv_source is DerivativeSource.numeric:
        derivs = [fa] + [iterated_pfd(_scalar(f), l, pp, w, a, a, q) for l in range(1, n + 1)]
    else:
        if derivatives is None:
            raise DomainError("user_supplied derivatives require the derivative values")
        derivs = [float(d) for d in derivatives]
        require(len(derivs) == n + 1, f"n+1 derivative values (n={n}, got {len(derivs)})")
        require(bool(np.isclose(derivs[0], fa, rtol=1e-12, atol=1e-15)),
                f"first derivative value equals f(a) (f(a)={fa}, got {derivs[0]})")
    return TaylorApproximant(a, n, pp, w, tuple(derivs), deriv_source)


def approximant(f: Expandable, n: int, pp: PowerParams, w: WeightFunction, a: float,
                deriv_source: DerivativeSource, t: float, **kwargs) -> float:
    return build_approximant(f, n, pp, w, a, deriv_source, **kwargs)(t)


def remainder_values(f: Expandable, N: int, pp: PowerParams, w: WeightFunction, a: float, t: float, lams,
                     deriv_source: DerivativeSource = DerivativeSource.numeric,
                     q: QuadratureConfig = QuadratureConfig(), tol: float = Consts.series_tol) -> np.ndarray:
    require(N >= 0, f"N >= 0 (N={N})")
    lams = np.atleast_1d(np.asarray(lams, dtype=float))
    require(bool(np.all((lams >= a) & (lams <= t))), f"a <= lambda <= t (a={a}, t={t})")
    level = N + 1
    if deriv_source is DerivativeSource.closed_form:
        g = _closed_form_target(f, w)
        derivs = np.array([lth_derivative_series(g, level, pp, lam, tol).value for lam in lams])
    elif deriv_source is DerivativeSource.numeric:
        derivs = _numeric_derivatives(_scalar(f), level, pp, w, a, t, lams, q)
    else:
        raise DerivativeUnavailableError("the remainder needs pD^(N+1) f away from the base point; "
                                         "use closed_form or numeric")
    w_t = float(w.checked([t])[0])
    poly = weight_polynomial_values(level, pp, [t - a])[0]
    return w.checked(lams) * derivs * poly / w_t


def _numeric_derivatives(f: ScalarFunction, level: int, pp: PowerParams, w: WeightFunction, a: float,
                         t: float, lams: np.ndarray, q: QuadratureConfig) -> np.ndarray:
    if t == a:
        return np.zeros_like(lams)
    if lams.size == 1:
        return np.array([iterated_pfd(f, level, pp, w, a, float(lams[0]), q)])
    logger.debug("remainder: tabulating pD^{} over [{}, {}]", level, a, t)
    return tabulate_iterated_pfd(f, level, pp, w, a, t, q).spline(level)(lams)


def remainder(f: Expandable, N: int, pp: PowerParams, w: WeightFunction, a: float, t: float, lam: float,
              **kwargs) -> float:
    return float(remainder_values(f, N, pp, w, a, t, [lam], **kwargs)[0])
