"""Deterministic conformance sweeps. Each suite is a fixed grid of cases; every case
compares an operator value against an oracle or an identity, and the report keeps
the grid order whatever the number of workers.
"""
import enum
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple, Union

from loguru import logger

from closedforms.examples import (example_approximant, example_remainder, find_remainder_lambda, liouville_check,
                                  max_errors)
from closedforms.lth_derivative import convergence_ratio
from closedforms.registered import FunctionKind, RegisteredFunction
from consts import Consts
from operators.functions import WeightFunction, parse_function, parse_weight
from operators.power_derivative import pfd_quadrature, pfd_series
from operators.power_integral import compose_identity_residual, iterated_pfi, pfi
from operators.power_params import PowerParams
from operators.quadrature import QuadratureConfig
from specfun.mittag_leffler import power_ml
from taylor.approximant import DerivativeSource, approximant, remainder
from taylor.mean_value import find_mvt_lambda, telescoping_check
from taylor.weight_polynomial import weight_polynomial
from util.errors import DomainError
from .oracles import (naive_iterated_pfi, oracle_rl_integral, reference_atangana_baleanu, reference_caputo_fabrizio,
                      reference_example_approximant, reference_weighted_atangana_baleanu,
                      reference_weighted_generalized)
from .sweep_report import Criterion, SweepCase, SweepReport


class Suite(enum.Enum):
    composition = "composition"
    forms = "forms"
    iteration = "iteration"
    reductions = "reductions"
    taylor = "taylor"
    ml_identity = "ml_identity"
    closedforms = "closedforms"


ALPHAS = (0.1, 0.5, 0.9)
BETAS = (0.8, 1.0, 1.5)
POWERS = (0.5, math.e, 3.0)
FUNCTIONS = ("t", "t^2", "sin", "exp")
WEIGHTS = ("one", "exp(-1*t)", "1+1*t^2")
OPERATOR_T = 0.5

Case = Tuple


def _label(**params) -> str:
    return ",".join(f"{k}={v:.6g}" if isinstance(v, float) else f"{k}={v}" for k, v in params.items())


def _operator_grid() -> List[Case]:
    return list(itertools.product(ALPHAS, BETAS, POWERS, FUNCTIONS, WEIGHTS))


def _composition(case: Case, q: QuadratureConfig) -> SweepCase:
    alpha, beta, p, f, w = case
    residual = compose_identity_residual(parse_function(f), PowerParams(alpha, beta, p), parse_weight(w),
                                         0.0, OPERATOR_T, q)
    return SweepCase(_label(alpha=alpha, beta=beta, p=p, f=f, w=w), residual, 0.0)


def _forms(case: Case, q: QuadratureConfig) -> SweepCase:
    alpha, beta, p, f, w = case
    fn, pp, wt = parse_function(f), PowerParams(alpha, beta, p), parse_weight(w)
    series = pfd_series(fn, pp, wt, 0.0, OPERATOR_T, q).value
    return SweepCase(_label(alpha=alpha, beta=beta, p=p, f=f, w=w), series,
                     pfd_quadrature(fn, pp, wt, 0.0, OPERATOR_T, q))


def _iteration_grid() -> List[Case]:
    return list(itertools.product(ALPHAS, BETAS, POWERS, (2, 3, 4)))


def _iteration(case: Case, q: QuadratureConfig) -> SweepCase:
    alpha, beta, p, n = case
    f, w = parse_function("t^2"), WeightFunction.exponential(1.0)
    value = iterated_pfi(f, n, PowerParams(alpha, beta, p), w, 0.0, 1.0, q)
    return SweepCase(_label(alpha=alpha, beta=beta, p=p, n=n), value,
                     naive_iterated_pfi(f, w, n, alpha, beta, p, 0.0, 1.0))


class Reduction(enum.Enum):
    caputo_fabrizio = "caputo_fabrizio"
    atangana_baleanu = "atangana_baleanu"
    weighted_atangana_baleanu = "weighted_atangana_baleanu"
    weighted_generalized = "weighted_generalized"
    generalized_integral = "generalized_integral"


def _reductions_grid() -> List[Case]:
    return list(itertools.product(Reduction, ALPHAS, (0.25, 0.5, 0.75, 1.0), ("t", "sin", "exp")))


def _reduction(case: Case, q: QuadratureConfig) -> SweepCase:
    kind, alpha, t, f = case
    fn = parse_function(f)
    label = _label(kind=kind.value, alpha=alpha, t=t, f=f)
    one = WeightFunction.unit()
    if kind is Reduction.caputo_fabrizio:
        lhs = pfd_quadrature(fn, PowerParams(alpha, 1.0, math.e), one, 0.0, t, q)
        rhs = reference_caputo_fabrizio(fn, alpha, 0.0, t)
    elif kind is Reduction.atangana_baleanu:
        lhs = pfd_quadrature(fn, PowerParams(alpha, alpha, math.e), one, 0.0, t, q)
        rhs = reference_atangana_baleanu(fn, alpha, 0.0, t)
    elif kind is Reduction.weighted_atangana_baleanu:
        w = WeightFunction.quadratic(1.0)
        lhs = pfd_quadrature(fn, PowerParams(alpha, alpha, math.e), w, 0.0, t, q)
        rhs = reference_weighted_atangana_baleanu(fn, w, alpha, 0.0, t)
    elif kind is Reduction.weighted_generalized:
        w = WeightFunction.exponential(1.0)
        lhs = pfd_quadrature(fn, PowerParams(alpha, 1.5, math.e), w, 0.0, t, q)
        rhs = reference_weighted_generalized(fn, w, alpha, 1.5, 0.0, t)
    else:
        lhs = pfi(fn, PowerParams(alpha, alpha, math.e), one, 0.0, t, q)
        rhs = (1.0 - alpha) * float(fn([t])[0]) + alpha * oracle_rl_integral(fn, one, alpha, 0.0, t)
    return SweepCase(label, lhs, rhs)


TELESCOPING_PARAMS = PowerParams(0.4, 1.1, math.e)
EXAMPLE_ALPHA, EXAMPLE_BETA = 0.1, 1.5


def _taylor_grid() -> List[Case]:
    # a mean value point exists for ln p >= 0
    mvt = [("mvt", f, alpha, beta, p)
           for f, alpha, beta, p in itertools.product(FUNCTIONS, ALPHAS, BETAS, (2.0, math.e, 3.0))]
    telescoping = [("telescoping", f, n) for f, n in itertools.product(("t^2", "sin"), (0, 1))]
    remainders = [("remainder", f, alpha, w) for f, alpha, w in itertools.product(FUNCTIONS, ALPHAS,
                                                                                  ("one", "exp(-1*t)"))]
    approximants = [("approximant", kind, n, p)
                    for kind, n, p in itertools.product(FunctionKind, (1, 2, 3), (0.5, 2.0, math.e))]
    return mvt + telescoping + remainders + approximants


def _taylor_remainder(f: str, alpha: float, w: str, q: QuadratureConfig) -> SweepCase:
    """Numeric first-order remainder against the Caputo-Fabrizio or weighted generalized reference."""
    t, lam = 1.0, 0.6
    fn, wt = parse_function(f), parse_weight(w)
    beta = 1.0 if wt.is_unit else 1.5
    pp = PowerParams(alpha, beta, math.e)
    lhs = remainder(fn, 0, pp, wt, 0.0, t, lam, deriv_source=DerivativeSource.numeric, q=q)
    if wt.is_unit:
        derivative = reference_caputo_fabrizio(fn, alpha, 0.0, lam)
    else:
        derivative = reference_weighted_generalized(fn, wt, alpha, beta, 0.0, lam)
    scale = float(wt([lam])[0]) / float(wt([t])[0])
    return SweepCase(_label(check="remainder", f=f, alpha=alpha, beta=beta, w=w, lam=lam), lhs,
                     derivative * scale * weight_polynomial(1, pp, t))


def _taylor(case: Case, q: QuadratureConfig) -> SweepCase:
    check, *params = case
    one = WeightFunction.unit()
    if check == "mvt":
        f, alpha, beta, p = params
        root = find_mvt_lambda(parse_function(f), PowerParams(alpha, beta, p), one, 0.0, 1.0, q)
        return SweepCase(_label(check=check, f=f, alpha=alpha, beta=beta, p=p, lam=root.lam), root.residual, 0.0)
    if check == "telescoping":
        f, n = params
        value = telescoping_check(parse_function(f), n, TELESCOPING_PARAMS, one, 0.0, OPERATOR_T, q)
        return SweepCase(_label(check=check, f=f, n=n), value, 0.0, min_tolerance=Consts.telescoping_tol)
    if check == "remainder":
        return _taylor_remainder(*params, q)
    kind, n, p = params
    g = RegisteredFunction(kind, 1.0)
    lhs = approximant(g, n, PowerParams(EXAMPLE_ALPHA, EXAMPLE_BETA, p), one, 0.0, DerivativeSource.closed_form,
                      OPERATOR_T)
    return SweepCase(_label(check=check, g=g.name, n=n, p=p), lhs,
                     reference_example_approximant(kind.value, n, EXAMPLE_ALPHA, EXAMPLE_BETA, p, OPERATOR_T))


def _ml_identity_grid() -> List[Case]:
    return list(itertools.product((0.5, 1.0, 1.5), (1.0, 2.0), (0.5, 2.0, math.e, 10.0),
                                  (-5.0, -1.0, 0.0, 1.0, 5.0)))


def _ml_identity(case: Case, q: QuadratureConfig) -> SweepCase:
    k, l, p, tau = case
    return SweepCase(_label(k=k, l=l, p=p, tau=tau), power_ml(k, l, p, tau).value,
                     power_ml(k, l, math.e, tau * math.log(p)).value)


def _closedforms_grid() -> List[Case]:
    liouville = [("liouville", FunctionKind.exp, alpha, beta, p)
                 for alpha, beta, p in ((0.3, 1.5, 2.0), (0.1, 1.5, 2.0), (0.1, 1.5, math.e), (0.3, 1.2, 2.0))]
    remainders = [("remainder", kind, p, n)
                  for kind, p, n in itertools.product(FunctionKind, (1.0, 2.0), (0, 1, 2))]
    monotone = [("monotone", p, n) for p, n in itertools.product((0.5, 2.0, math.e, 10.0), (1, 2))]
    return liouville + remainders + monotone


def _closedforms(case: Case, q: QuadratureConfig) -> SweepCase:
    check, *params = case
    t = OPERATOR_T
    if check == "liouville":
        kind, alpha, beta, p = params
        g = RegisteredFunction(kind, 1.0)
        result = liouville_check(g, PowerParams(alpha, beta, p), t, q)
        return SweepCase(_label(check=check, g=g.name, alpha=alpha, beta=beta, p=p),
                         result.closed_form, result.far_left, min_tolerance=Consts.liouville_tol)
    if check == "remainder":
        kind, p, n = params
        pp = PowerParams(EXAMPLE_ALPHA, EXAMPLE_BETA, p)
        g = RegisteredFunction(kind, 1.0)
        root = find_remainder_lambda(g, n, pp, t)
        gap = float(g(t)) - example_approximant(g, n, pp, t)
        # exp and cos do not balance the closed-form remainder on [0, t]
        return SweepCase(_label(check=check, g=g.name, p=p, N=n, lam=root.lam, bracketed=root.bracketed,
                                ratio=convergence_ratio(g, pp)),
                         gap, example_remainder(g, n, pp, t, root.lam), data_only=kind is not FunctionKind.sin)
    p, n = params
    pp = PowerParams(EXAMPLE_ALPHA, EXAMPLE_BETA, p)
    errors = max_errors(RegisteredFunction(FunctionKind.sin, 1.0), [n, n + 1], pp)
    return SweepCase(_label(check=check, p=p, n=n, err_n=errors[n], err_next=errors[n + 1]),
                     max(errors[n + 1] - errors[n], 0.0), 0.0, data_only=True)


@dataclass(frozen=True)
class _SuiteDef:
    grid: Callable[[], List[Case]]
    evaluate: Callable[[Case, QuadratureConfig], SweepCase]
    criterion: Criterion = Criterion.absolute


SUITES = {
    Suite.composition: _SuiteDef(_operator_grid, _composition),
    Suite.forms: _SuiteDef(_operator_grid, _forms),
    Suite.iteration: _SuiteDef(_iteration_grid, _iteration),
    Suite.reductions: _SuiteDef(_reductions_grid, _reduction),
    Suite.taylor: _SuiteDef(_taylor_grid, _taylor),
    Suite.ml_identity: _SuiteDef(_ml_identity_grid, _ml_identity, Criterion.relative),
    Suite.closedforms: _SuiteDef(_closedforms_grid, _closedforms),
}


def parse_suite(name: Union[str, Suite]) -> Suite:
    if isinstance(name, Suite):
        return name
    if name not in Suite.__members__:
        raise DomainError(f"unknown suite {name!r}; expected one of {', '.join(Suite.__members__)}")
    return Suite[name]


def default_grid(suite: Union[str, Suite]) -> List[Case]:
    return SUITES[parse_suite(suite)].grid()


def run_sweep(suite: Union[str, Suite], tolerance: float, grid: Optional[Sequence[Case]] = None,
              workers: int = 1, q: Optional[QuadratureConfig] = None) -> SweepReport:
    suite = parse_suite(suite)
    if not tolerance > 0:
        raise DomainError(f"constraint violated: tolerance > 0 (tolerance={tolerance})")
    definition = SUITES[suite]
    cases = definition.grid() if grid is None else list(grid)
    q = q or QuadratureConfig(panels=Consts.sweep_panels)
    logger.info("Suite {}: {} cases, {} workers", suite.value, len(cases), workers)

    def evaluate(case):
        return definition.evaluate(case, q)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(evaluate, cases))
    else:
        results = [evaluate(case) for case in cases]
    report = SweepReport(suite.value, tolerance, definition.criterion, results)
    report.log()
    return report
