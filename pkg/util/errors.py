"""Exceptions shared by every package, and the exit code the CLI maps each to."""


class PowerFracError(Exception):
    exit_code = 1


class DomainError(PowerFracError, ValueError):
    exit_code = 2


class DerivativeUnavailableError(PowerFracError, LookupError):
    exit_code = 2


class ConvergenceError(PowerFracError, ArithmeticError):
    exit_code = 3

    def __init__(self, message: str, **context):
        self.context = context
        if context:
            details = ", ".join(f"{k}={v}" for k, v in context.items())
            message = f"{message} ({details})"
        super().__init__(message)


class ResolutionError(PowerFracError, ArithmeticError):
    exit_code = 4

    def __init__(self, message: str, *, estimate: float, level: int):
        self.estimate = estimate
        self.level = level
        super().__init__(f"{message} (level={level}, estimate={estimate:.3e})")


def require(condition: bool, constraint: str):
    if not condition:
        raise DomainError(f"constraint violated: {constraint}")
