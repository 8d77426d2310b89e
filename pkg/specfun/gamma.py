"""Real Gamma function with explicit domain and range errors."""
import math

import numpy as np
from scipy import special

from util.errors import DomainError


def gamma(x: float) -> float:
    x = float(x)
    if not x > 0:
        raise DomainError(f"gamma requires x > 0, got {x}")
    value = float(special.gamma(x))
    if not math.isfinite(value):
        raise OverflowError(f"gamma({x}) exceeds the floating range")
    return value


def gamma_ratio(x: float, shift: float) -> float:
    """Gamma(x) / Gamma(x + shift) for x, x + shift > 0, without forming either factor."""
    return float(np.exp(special.gammaln(x) - special.gammaln(x + shift)))
