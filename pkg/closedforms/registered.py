import enum
import math
from dataclasses import dataclass

import numpy as np

from operators.functions import ScalarFunction
from util.errors import DomainError, require


class FunctionKind(enum.Enum):
    exp = "exp"
    cos = "cos"
    sin = "sin"


@dataclass(frozen=True)
class RegisteredFunction:
    """exp(delta t), cos(delta t) or sin(delta t); the functions with closed-form derivatives."""
    kind: FunctionKind
    delta: float = 1.0

    def __post_init__(self):
        require(self.delta > 0, f"delta > 0 (delta={self.delta})")

    @property
    def name(self) -> str:
        return f"{self.kind.value}({self.delta:g}t)"

    def phase_term(self, q: int, beta: float, t):
        """exp(delta t), or cos / sin of (delta t - beta q pi / 2)."""
        x = self.delta * np.asarray(t, dtype=float)
        if self.kind is FunctionKind.exp:
            return np.exp(x)
        shift = beta * q * math.pi / 2
        return np.cos(x - shift) if self.kind is FunctionKind.cos else np.sin(x - shift)

    def magnitude_bound(self, t: float) -> float:
        """Bound on |phase_term(q, beta, t)| over all q."""
        return math.exp(self.delta * t) if self.kind is FunctionKind.exp else 1.0

    def __call__(self, t):
        return self.phase_term(0, 0.0, t)

    def as_function(self) -> ScalarFunction:
        d = self.delta
        derivatives = {
            FunctionKind.exp: lambda x: d * np.exp(d * x),
            FunctionKind.cos: lambda x: -d * np.sin(d * x),
            FunctionKind.sin: lambda x: d * np.cos(d * x),
        }
        return ScalarFunction(self, derivatives[self.kind], self.name)


def parse_registered(kind: str, delta: float) -> RegisteredFunction:
    if kind not in FunctionKind.__members__:
        raise DomainError(f"unknown example {kind!r}; expected exp, cos or sin")
    return RegisteredFunction(FunctionKind[kind], delta)
