"""Reference values computed without the operators package.

Each oracle reaches the same mathematical quantity by a different road: refined
trapezoid sums, scipy's adaptive quadrature with the plain exponential or a
separately summed Mittag-Leffler kernel, exact composition in a power basis, and
the closed-form approximants of exp, cos and sin summed at extended precision.
"""
import math
from typing import Dict

import mpmath
import numpy as np
from numpy.polynomial import Chebyshev, Polynomial
from scipy import integrate, special

from consts import Consts
from operators.functions import ScalarFunction, WeightFunction
from util.errors import ConvergenceError, require

_QUAD = dict(epsabs=1e-14, epsrel=1e-13, limit=500)


def _check_limits(a: float, t: float):
    require(t >= a, f"t >= a (a={a}, t={t})")


def _rates(alpha: float):
    require(0.0 <= alpha < 1.0, f"0 <= alpha < 1 (alpha={alpha})")
    return 1.0 - alpha, alpha / (1.0 - alpha)


def _at(fn, x: float) -> float:
    return float(fn(np.array([x]))[0])


def oracle_rl_integral(f: ScalarFunction, w: WeightFunction, beta: float, a: float, t: float,
                       panels: int = Consts.oracle_panels) -> float:
    """Weighted RL integral through u = (t - tau)^beta and a trapezoid sum in u."""
    require(beta > 0, f"beta > 0 (beta={beta})")
    _check_limits(a, t)
    if t == a:
        return 0.0
    u = np.linspace(0.0, (t - a) ** beta, panels + 1)
    tau = np.maximum(t - u ** (1.0 / beta), a)
    integral = integrate.trapezoid(w(tau) * f(tau), u) / beta
    return float(integral / (special.gamma(beta) * _at(w, t)))


def _classical_mittag_leffler(k: float, z: float, tol: float = 1e-17, max_terms: int = 100_000) -> float:
    """sum z^n / Gamma(k n + 1), each term formed directly from lgamma."""
    if z == 0.0:
        return 1.0
    log_z = math.log(abs(z))
    total = 0.0
    for n in range(max_terms):
        term = (-1.0 if z < 0 and n % 2 else 1.0) * math.exp(n * log_z - math.lgamma(k * n + 1.0))
        total += term
        shrinking = log_z + math.lgamma(k * (n + 1) + 1.0) - math.lgamma(k * (n + 2) + 1.0) <= 0.0
        if abs(term) < tol and shrinking:
            return total
    raise ConvergenceError("reference Mittag-Leffler series did not converge", k=k, z=z)


def reference_caputo_fabrizio(f: ScalarFunction, alpha: float, a: float, t: float) -> float:
    """1/chi int_a^t exp(-mu (t - tau)) f'(tau) dtau."""
    chi, mu = _rates(alpha)
    _check_limits(a, t)
    if t == a:
        return 0.0
    value, _ = integrate.quad(lambda tau: math.exp(-mu * (t - tau)) * _at(f.derivative, tau), a, t, **_QUAD)
    return value / chi


def reference_weighted_generalized(f: ScalarFunction, w: WeightFunction, alpha: float, beta: float,
                                   a: float, t: float) -> float:
    """1/chi 1/w(t) int_a^t E_beta(-mu (t - tau)^beta) (w f)'(tau) dtau with the classical E_beta.

    With s = t - tau = u^(1/beta) the kernel becomes E_beta(-mu u) against the
    algebraic weight u^(1/beta - 1), integrated by quad's weight='alg' rule.
    """
    chi, mu = _rates(alpha)
    require(beta > 0, f"beta > 0 (beta={beta})")
    _check_limits(a, t)
    if t == a:
        return 0.0

    def integrand(u):
        tau = t - u ** (1.0 / beta)
        slope = _at(w.derivative, tau) * _at(f, tau) + _at(w, tau) * _at(f.derivative, tau)
        return _classical_mittag_leffler(beta, -mu * u) * slope

    value, _ = integrate.quad(integrand, 0.0, (t - a) ** beta, weight="alg",
                              wvar=(1.0 / beta - 1.0, 0.0), **_QUAD)
    return value / (beta * chi * _at(w, t))


def reference_weighted_atangana_baleanu(f: ScalarFunction, w: WeightFunction, alpha: float, a: float,
                                        t: float) -> float:
    return reference_weighted_generalized(f, w, alpha, alpha, a, t)


def reference_atangana_baleanu(f: ScalarFunction, alpha: float, a: float, t: float) -> float:
    return reference_weighted_atangana_baleanu(f, WeightFunction.unit(), alpha, a, t)


def naive_iterated_pfi(f: ScalarFunction, w: WeightFunction, n: int, alpha: float, beta: float, p: float,
                       a: float, t: float, degree: int = Consts.oracle_degree) -> float:
    """n nested applications of the power fractional integral (N = 1).

    w f is interpolated by a Chebyshev series in x = tau - a and rewritten as powers
    of x; each application maps c x^e to chi c x^e + ln p phi c Gamma(e+1)/Gamma(e+beta+1) x^(e+beta).
    """
    require(n >= 0, f"n >= 0 (n={n})")
    _check_limits(a, t)
    chi = 1.0 - alpha
    lam = math.log(p) * alpha
    span = t - a
    if span == 0.0:
        return chi ** n * _at(f, t)
    series = Chebyshev.interpolate(lambda x: w(x + a) * f(x + a), degree, domain=[0.0, span])
    coeffs: Dict[float, float] = {float(e): float(c) for e, c in enumerate(series.convert(kind=Polynomial).coef)}
    for _ in range(n):
        nxt: Dict[float, float] = {}
        for e, c in coeffs.items():
            nxt[e] = nxt.get(e, 0.0) + chi * c
            if lam != 0.0:
                key = e + beta
                nxt[key] = nxt.get(key, 0.0) + lam * c * math.exp(math.lgamma(e + 1.0) - math.lgamma(e + beta + 1.0))
        coeffs = nxt
    total = math.fsum(c * span ** e for e, c in coeffs.items())
    return total / _at(w, t)


def reference_example_approximant(kind: str, n: int, alpha: float, beta: float, p: float, t: float,
                                  delta: float = 1.0, dps: int = Consts.oracle_dps,
                                  max_terms: int = Consts.max_terms) -> float:
    """Order-n approximant of exp / cos / sin(delta t) about 0, summed term by term in mpmath.

    sum_l D_l W_l(t) with D_l = chi^-l sum_q C(q+l-1, l-1) r^q phase_q(0), r = -mu ln p delta^-beta.
    """
    require(n >= 0, f"n >= 0 (n={n})")
    require(kind in ("exp", "cos", "sin"), f"kind in exp, cos, sin (kind={kind})")
    require(t >= 0, f"t >= 0 (t={t})")
    with mpmath.workdps(dps):
        alpha, beta, delta, t = (mpmath.mpf(v) for v in (alpha, beta, delta, t))
        log_p = mpmath.log(mpmath.mpf(p))
        chi, phi = 1 - alpha, alpha
        r = -alpha / chi * log_p * delta ** (-beta)
        require(abs(r) < 1, f"|mu ln p delta^-beta| < 1 (ratio={float(abs(r))})")
        eps = mpmath.mpf(10) ** (-dps)

        def phase(q):
            if kind == "exp":
                return mpmath.mpf(1)
            shift = beta * q * mpmath.pi / 2
            return mpmath.cos(-shift) if kind == "cos" else mpmath.sin(-shift)

        total = mpmath.mpf(0)
        for l in range(n + 1):
            if l == 0:
                d = phase(0)
            else:
                d = mpmath.mpf(0)
                for q in range(max_terms):
                    bound = mpmath.binomial(q + l - 1, l - 1) * abs(r) ** q
                    d += bound * mpmath.sign(r) ** q * phase(q)
                    if bound < eps and q >= l:
                        break
                else:
                    raise ConvergenceError("reference closed-form derivative did not converge", l=l)
                d /= chi ** l
            w = mpmath.fsum(mpmath.binomial(l, m) * chi ** (l - m) * (log_p * phi) ** m
                            * t ** (m * beta) / mpmath.gamma(m * beta + 1) for m in range(l + 1))
            total += d * w
        return float(total)
