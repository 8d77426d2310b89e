import numpy as np
from scipy import special

from operators.power_params import PowerParams
from specfun.gamma import gamma
from util.errors import require


def weight_polynomial_values(l: int, pp: PowerParams, dts) -> np.ndarray:
    """W_l(dt) = sum_m C(l, m) chi^(l-m) (ln p phi)^m dt^(m beta) / Gamma(m beta + 1), dt^0 = 1."""
    require(l >= 0, f"l >= 0 (l={l})")
    dts = np.atleast_1d(np.asarray(dts, dtype=float))
    require(bool(np.all(dts >= 0.0)), "dt >= 0")
    lam = pp.integral_coefficient
    total = np.full(dts.shape, pp.chi ** l)
    if lam == 0.0:
        return total
    for m in range(1, l + 1):
        coeff = float(special.comb(l, m, exact=True)) * pp.chi ** (l - m) * lam ** m / gamma(m * pp.beta + 1.0)
        total = total + coeff * dts ** (m * pp.beta)
    return total


def weight_polynomial(l: int, pp: PowerParams, dt: float) -> float:
    return float(weight_polynomial_values(l, pp, [dt])[0])
