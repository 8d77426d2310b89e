import math
from dataclasses import dataclass

import numpy as np

from util.errors import DomainError, require


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid with inclusive endpoints."""
    t_min: float
    t_max: float
    points: int

    def __post_init__(self):
        require(self.points >= 2, f"points >= 2 (points={self.points})")
        require(self.t_max > self.t_min, f"t_max > t_min (t_min={self.t_min}, t_max={self.t_max})")

    def values(self) -> np.ndarray:
        return np.linspace(self.t_min, self.t_max, self.points)


def parse_real(text: str) -> float:
    """A float, or `e` for Euler's number."""
    text = text.strip()
    if text == "e":
        return math.e
    try:
        return float(text)
    except ValueError:
        raise DomainError(f"not a real number: {text!r}") from None


def parse_grid(text: str) -> GridSpec:
    parts = text.split(":")
    if len(parts) != 3:
        raise DomainError(f"grid must be min:max:points, got {text!r}")
    try:
        points = int(parts[2])
    except ValueError:
        raise DomainError(f"grid points must be an integer, got {parts[2]!r}") from None
    return GridSpec(parse_real(parts[0]), parse_real(parts[1]), points)
