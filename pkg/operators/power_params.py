import math
from dataclasses import dataclass, field
from typing import Callable

from util.errors import require


def unit_normalization(alpha: float) -> float:
    return 1.0


@dataclass(frozen=True)
class PowerParams:
    """Order alpha, kernel exponent beta, power p and normalization N of the operators.

    chi = (1-alpha)/N(alpha), phi = alpha/N(alpha), mu = alpha/(1-alpha).
    """
    alpha: float
    beta: float
    p: float
    normalization: Callable[[float], float] = field(default=unit_normalization, compare=False)

    def __post_init__(self):
        require(0.0 <= self.alpha < 1.0, f"0 <= alpha < 1 (alpha={self.alpha})")
        require(self.beta > 0.0, f"beta > 0 (beta={self.beta})")
        require(self.p > 0.0, f"p > 0 (p={self.p})")
        require(self.normalization(0.0) == 1.0, "N(0) = 1")
        require(self.normalization(self.alpha) > 0.0, f"N(alpha) > 0 (alpha={self.alpha})")

    @property
    def norm(self) -> float:
        return float(self.normalization(self.alpha))

    @property
    def chi(self) -> float:
        return (1.0 - self.alpha) / self.norm

    @property
    def phi(self) -> float:
        return self.alpha / self.norm

    @property
    def mu(self) -> float:
        return self.alpha / (1.0 - self.alpha)

    @property
    def log_p(self) -> float:
        return math.log(self.p)

    @property
    def integral_coefficient(self) -> float:
        """ln p * phi, the weight of the RL part of the power fractional integral."""
        return self.log_p * self.phi

    @property
    def series_ratio(self) -> float:
        """-mu ln p, the geometric factor of the derivative's series form."""
        return -self.mu * self.log_p

    def describe(self) -> str:
        return f"alpha={self.alpha:g},beta={self.beta:g},p={self.p:g}"
