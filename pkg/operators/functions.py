"""Scalar functions and weights handed to the operators.

All callables take and return numpy arrays. A missing derivative falls back to a
central difference with step max(h, h*|t|), h = Consts.fd_rel_step, and the
object reports it through `finite_difference`.
"""
import math
import re
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from loguru import logger

from consts import Consts
from util.errors import DomainError

ArrayFn = Callable[[np.ndarray], np.ndarray]


def _evaluate(fn: ArrayFn, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    return np.broadcast_to(np.asarray(fn(x), dtype=float), x.shape).copy()


def central_difference(fn: ArrayFn, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    h = np.maximum(Consts.fd_rel_step, Consts.fd_rel_step * np.abs(x))
    return (_evaluate(fn, x + h) - _evaluate(fn, x - h)) / (2.0 * h)


@dataclass(frozen=True)
class ScalarFunction:
    f: ArrayFn
    f_prime: Optional[ArrayFn] = None
    name: str = "f"

    def __call__(self, x) -> np.ndarray:
        return _evaluate(self.f, x)

    @property
    def finite_difference(self) -> bool:
        return self.f_prime is None

    def derivative(self, x) -> np.ndarray:
        if self.f_prime is None:
            logger.debug("{}: central-difference derivative", self.name)
            return central_difference(self.f, x)
        return _evaluate(self.f_prime, x)

    def scaled(self, c: float) -> "ScalarFunction":
        fp = None if self.f_prime is None else (lambda x: c * _evaluate(self.f_prime, x))
        return ScalarFunction(lambda x: c * _evaluate(self.f, x), fp, f"{c:g}*{self.name}")

    def __add__(self, other: "ScalarFunction") -> "ScalarFunction":
        fp = None
        if self.f_prime is not None and other.f_prime is not None:
            fp = lambda x: self.derivative(x) + other.derivative(x)
        return ScalarFunction(lambda x: self(x) + other(x), fp, f"{self.name}+{other.name}")


@dataclass(frozen=True)
class WeightFunction:
    omega: ArrayFn
    omega_prime: Optional[ArrayFn] = None
    name: str = "w"
    is_unit: bool = False

    def __call__(self, x) -> np.ndarray:
        return _evaluate(self.omega, x)

    @property
    def finite_difference(self) -> bool:
        return self.omega_prime is None

    def derivative(self, x) -> np.ndarray:
        if self.omega_prime is None:
            return central_difference(self.omega, x)
        return _evaluate(self.omega_prime, x)

    def checked(self, x) -> np.ndarray:
        """Weight values on x; omega <= 0 anywhere is a domain error."""
        values = self(x)
        if not np.all(values > 0):
            bad = np.asarray(x, dtype=float)[~(values > 0)]
            raise DomainError(f"weight {self.name} must be > 0 on [a, t]; violated at t={float(bad.flat[0])}")
        return values

    @staticmethod
    def unit() -> "WeightFunction":
        return WeightFunction(lambda x: np.ones_like(x), lambda x: np.zeros_like(x), "one", True)

    @staticmethod
    def exponential(c: float) -> "WeightFunction":
        return WeightFunction(lambda x: np.exp(-c * x), lambda x: -c * np.exp(-c * x), f"exp(-{c:g}*t)")

    @staticmethod
    def quadratic(c: float) -> "WeightFunction":
        return WeightFunction(lambda x: 1.0 + c * x * x, lambda x: 2.0 * c * x, f"1+{c:g}*t^2")


def constant(c: float) -> ScalarFunction:
    return ScalarFunction(lambda x: np.full_like(x, c), lambda x: np.zeros_like(x), f"const={c:g}")


BUILTIN_FUNCTIONS = {
    "t": lambda: ScalarFunction(lambda x: x, lambda x: np.ones_like(x), "t"),
    "t^2": lambda: ScalarFunction(lambda x: x * x, lambda x: 2.0 * x, "t^2"),
    "sin": lambda: ScalarFunction(np.sin, np.cos, "sin"),
    "cos": lambda: ScalarFunction(np.cos, lambda x: -np.sin(x), "cos"),
    "exp": lambda: ScalarFunction(np.exp, np.exp, "exp"),
}

_CONST_RE = re.compile(r"^const=(?P<c>[-+0-9.eE]+)$")
_EXP_WEIGHT_RE = re.compile(r"^exp\(-(?P<c>[0-9.eE+-]+)\*t\)$")
_QUAD_WEIGHT_RE = re.compile(r"^1\+(?P<c>[0-9.eE+-]+)\*t\^2$")


def parse_function(spec: str) -> ScalarFunction:
    spec = spec.replace(" ", "")
    if spec in BUILTIN_FUNCTIONS:
        return BUILTIN_FUNCTIONS[spec]()
    if m := _CONST_RE.match(spec):
        return constant(float(m["c"]))
    raise DomainError(f"unknown function spec {spec!r}; expected one of "
                      f"{', '.join(BUILTIN_FUNCTIONS)} or const=<c>")


def parse_weight(spec: str) -> WeightFunction:
    spec = spec.replace(" ", "")
    if spec == "one":
        return WeightFunction.unit()
    if m := _EXP_WEIGHT_RE.match(spec):
        return WeightFunction.exponential(float(m["c"]))
    if m := _QUAD_WEIGHT_RE.match(spec):
        c = float(m["c"])
        if not math.isfinite(c) or c < 0:
            raise DomainError(f"weight 1+c*t^2 requires c >= 0, got {c}")
        return WeightFunction.quadratic(c)
    raise DomainError(f"unknown weight spec {spec!r}; expected one, exp(-c*t) or 1+c*t^2")
