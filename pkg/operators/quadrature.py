"""Composite Gauss-Legendre rules for integrals over [a, t] with a kernel at tau = t.

Integrals are written in the relative distance x = (t - tau)/T, T = t - a, so one
rule on [0, 1] serves every upper limit. With the substitution enabled the half
next to tau = t uses x = v^m / 2 with m = ceil(G*order)/order, G = kernel_grading:
a kernel (t-tau)^(order-1), or any function of (t-tau)^order, becomes polynomial
in v. (m = 1/order is the plain u = (t-tau)^order substitution.) The half next to
tau = a uses 1 - x = v^base_grading / 2, which absorbs the (tau-a)^gamma endpoint
behavior of composed operators.
"""
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from numpy.polynomial import legendre

from consts import Consts
from util.errors import require


@dataclass(frozen=True)
class QuadratureConfig:
    panels: int = Consts.panels
    nodes_per_panel: int = Consts.nodes_per_panel
    singularity_substitution: bool = True
    # sample points per unit length between iterated derivative levels
    grid_density: int = Consts.grid_density

    def __post_init__(self):
        require(self.panels >= 1, f"panels >= 1 (panels={self.panels})")
        require(self.nodes_per_panel >= 2, f"nodes_per_panel >= 2 (nodes_per_panel={self.nodes_per_panel})")
        require(self.grid_density >= 2, f"grid_density >= 2 (grid_density={self.grid_density})")


@lru_cache(maxsize=None)
def _composite(panels: int, nodes: int):
    """Composite Gauss-Legendre nodes and weights on [0, 1]."""
    y, wy = legendre.leggauss(nodes)
    edges = np.linspace(0.0, 1.0, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    x = (mid[:, None] + half[:, None] * y[None, :]).ravel()
    w = (half[:, None] * wy[None, :]).ravel()
    return x, w


def grading_exponent(order: float) -> float:
    return math.ceil(Consts.kernel_grading * order) / order


@lru_cache(maxsize=None)
def _unit_rule(order: float, panels: int, nodes: int, substitution: bool):
    if not substitution:
        return _composite(panels, nodes)
    v, wv = _composite(max(1, panels // 2), nodes)
    m = grading_exponent(order)
    near_x = 0.5 * v ** m
    near_w = 0.5 * m * v ** (m - 1.0) * wv
    b = Consts.base_grading
    far_x = 1.0 - 0.5 * v ** b
    far_w = 0.5 * b * v ** (b - 1) * wv
    return np.concatenate([near_x, far_x[::-1]]), np.concatenate([near_w, far_w[::-1]])


def unit_rule(order: float, q: QuadratureConfig):
    """Nodes x in (0, 1) and weights for integrands of the relative distance x."""
    x, w = _unit_rule(float(order), q.panels, q.nodes_per_panel, q.singularity_substitution)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def endpoint_quadrature(integrand: Callable[[np.ndarray, np.ndarray], np.ndarray], a: float, ts,
                        q: QuadratureConfig, *, order: float) -> np.ndarray:
    """int_a^t integrand(tau, s) dtau with s = t - tau, for every t in ts (t >= a).

    `order` names the kernel endpoint behavior at s = 0 (see module doc). Upper
    limits equal to a give exactly 0 without evaluating the integrand there.
    """
    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    span = ts - a
    empty = span <= 0.0
    span_safe = np.where(empty, 1.0, span)
    x, w = unit_rule(order, q)
    s = span_safe[:, None] * x[None, :]
    tau = np.where(empty[:, None], a, ts[:, None] - s)
    values = integrand(tau, s)
    result = np.sum(values * w[None, :], axis=1) * span_safe
    return np.where(empty, 0.0, result)
