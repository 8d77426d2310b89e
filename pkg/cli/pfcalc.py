"""Command-line front end: pfcalc {ml, deriv, integ, taylor, verify}.

Exit codes: 0 ok, 1 verification failed, 2 usage or domain error, 3 series did not
converge, 4 iterated derivative grid too coarse.
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

import numpy as np
from loguru import logger

from closedforms.examples import taylor_curves
from closedforms.registered import parse_registered
from consts import Consts
from operators.functions import parse_function, parse_weight
from operators.iterated_derivative import tabulate_iterated_pfd
from operators.power_derivative import pfd_quadrature_many, pfd_series
from operators.power_integral import iterated_pfi_many
from operators.power_params import PowerParams
from operators.quadrature import QuadratureConfig
from specfun.mittag_leffler import power_ml
from util.errors import DomainError, PowerFracError, require
from verify.sweeps import Suite, run_sweep
from .csv_out import csv_text, emit
from .grid_spec import parse_grid, parse_real
from .svg_plot import PlotSpec, render_svg

DEFAULT_VERIFY_TOL = 1e-6


def _quadrature(args) -> QuadratureConfig:
    return QuadratureConfig(panels=Consts.panels if args.quad_panels is None else args.quad_panels)


def _tol(args, default: float = Consts.series_tol) -> float:
    tol = default if args.tol is None else args.tol
    require(tol > 0, f"tol > 0 (tol={tol})")
    return tol


def _params(args) -> PowerParams:
    return PowerParams(parse_real(args.alpha), parse_real(args.beta), parse_real(args.p))


def _grid(args, a: float) -> np.ndarray:
    ts = parse_grid(args.grid).values()
    require(bool(ts[0] >= a), f"t >= a (a={a}, grid starts at {ts[0]})")
    return ts


def ml(args) -> int:
    k, l, p = parse_real(args.k), parse_real(args.l), parse_real(args.p)
    taus = [parse_real(args.tau)] if args.grid is None else parse_grid(args.grid).values()
    tol = _tol(args)
    rows = []
    for tau in taus:
        result = power_ml(k, l, p, float(tau), tol)
        rows.append((float(tau), result.value, result.terms_used))
    emit(csv_text(("tau", "value", "terms_used"), rows), args.out, args.digest)
    return 0


def deriv(args) -> int:
    f, w, pp, a = parse_function(args.f), parse_weight(args.weight), _params(args), parse_real(args.a)
    ts, q, tol = _grid(args, a), _quadrature(args), _tol(args)
    require(args.order >= 1, f"order >= 1 (order={args.order})")
    if args.form == "series":
        require(args.order == 1, "the series form evaluates order 1 only")
        results = [pfd_series(f, pp, w, a, float(t), q, tol) for t in ts]
        rows = [(float(t), r.value, r.terms_used) for t, r in zip(ts, results)]
        emit(csv_text(("t", "value", "terms_used"), rows), args.out, args.digest)
        return 0
    if args.order == 1:
        values = pfd_quadrature_many(f, pp, w, a, ts, q, tol)
    elif ts[-1] == a:
        values = np.zeros_like(ts)
    else:
        resolution = Consts.resolution_tol if args.tol is None else args.tol
        table = tabulate_iterated_pfd(f, args.order, pp, w, a, float(ts[-1]), q, resolution)
        values = table.spline(args.order)(ts)
    emit(csv_text(("t", "value"), zip(ts, values)), args.out, args.digest)
    return 0


def integ(args) -> int:
    f, w, pp, a = parse_function(args.f), parse_weight(args.weight), _params(args), parse_real(args.a)
    ts, q = _grid(args, a), _quadrature(args)
    require(args.order >= 0, f"order >= 0 (order={args.order})")
    values = iterated_pfi_many(f, args.order, pp, w, a, ts, q)
    emit(csv_text(("t", "value"), zip(ts, values)), args.out, args.digest)
    return 0


def _orders(text: str) -> List[int]:
    try:
        orders = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise DomainError(f"orders must be a comma separated list of integers, got {text!r}") from None
    require(len(orders) > 0 and all(n >= 0 for n in orders), f"orders >= 0 (orders={text})")
    return orders


def taylor(args) -> int:
    g = parse_registered(args.example, parse_real(args.delta))
    pp, tol, orders = _params(args), _tol(args), _orders(args.orders)
    ts = _grid(args, 0.0)
    curves = taylor_curves(g, orders, pp, ts, tol)
    exact = g(ts)
    header = ["t", "f"] + [f"A_{n}" for n in orders]
    rows = zip(ts, exact, *curves.values())
    csv_path = args.csv or args.out
    emit(csv_text(header, rows), csv_path, args.digest)
    if args.svg is not None:
        series = {g.name: exact}
        series.update({f"A_{n}": curve for n, curve in curves.items()})
        spec = PlotSpec(title=f"{g.name}, {pp.describe()}")
        emit(render_svg(spec, ts, series), args.svg, args.digest)
    return 0


def verify(args) -> int:
    q = QuadratureConfig(panels=Consts.sweep_panels if args.quad_panels is None else args.quad_panels)
    report = run_sweep(args.suite, _tol(args, DEFAULT_VERIFY_TOL), workers=args.workers, q=q)
    emit(report.to_text(), args.out, args.digest)
    return 0 if report.passed else 1


commands = {f.__name__: f for f in [ml, deriv, integ, taylor, verify]}


def _operator_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--function", dest="f", required=True, help="t, t^2, sin, cos, exp or const=<c>")
    parser.add_argument("--alpha", required=True)
    parser.add_argument("--beta", required=True)
    parser.add_argument("--p", required=True, help="power base, a number or e")
    parser.add_argument("--weight", default="one", help="one, exp(-c*t) or 1+c*t^2")
    parser.add_argument("--a", default="0", help="lower limit")
    parser.add_argument("--grid", required=True, help="min:max:points")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, help="series / resolution / verification tolerance")
    common.add_argument("--quad-panels", type=int, help="Gauss-Legendre panels per integral")
    common.add_argument("--seedless", action="store_true", help="reserved; rejected")
    common.add_argument("--out", type=Path, help="output file instead of stdout")
    common.add_argument("--digest", action="store_true", help="write <file>.md5 next to every output file")
    common.add_argument("-v", "--verbose", action="count", default=0, help="verbose level, -v to -vv")

    parser = argparse.ArgumentParser(prog="pfcalc", description="Power fractional calculus toolbox")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ml", parents=[common], help="power Mittag-Leffler function")
    p.add_argument("--k", required=True)
    p.add_argument("--l", required=True)
    p.add_argument("--p", required=True)
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument("--tau")
    where.add_argument("--grid", help="min:max:points")

    p = sub.add_parser("deriv", parents=[common], help="power fractional derivative")
    _operator_arguments(p)
    p.add_argument("--form", choices=("quadrature", "series"), default="quadrature")
    p.add_argument("--order", type=int, default=1)

    p = sub.add_parser("integ", parents=[common], help="power fractional integral")
    _operator_arguments(p)
    p.add_argument("--order", type=int, default=1)

    p = sub.add_parser("taylor", parents=[common], help="Taylor approximants of exp, cos, sin")
    p.add_argument("--example", required=True, help="exp, cos or sin")
    p.add_argument("--delta", default="1")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--orders", default="1,2,3")
    p.add_argument("--grid", default="0:1:201")
    p.add_argument("--csv", type=Path)
    p.add_argument("--svg", type=Path)

    p = sub.add_parser("verify", parents=[common], help="conformance sweeps")
    p.add_argument("--suite", required=True, help=", ".join(Suite.__members__))
    p.add_argument("--workers", type=int, default=1)
    return parser


def _configure_logging(verbose: int):
    level = "WARNING"
    if verbose == 1:
        level = "INFO"
    elif verbose >= 2:
        level = "DEBUG"
    logger.remove()
    logger.add(sys.stderr, level=level)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    _configure_logging(args.verbose)
    if args.seedless:
        logger.error("--seedless is reserved: nothing here draws random numbers")
        return DomainError.exit_code
    try:
        return commands[args.command](args)
    except PowerFracError as e:
        logger.error("{}: {}", type(e).__name__, e)
        return e.exit_code
    except OverflowError as e:
        logger.error("OverflowError: {}", e)
        return DomainError.exit_code
