from dataclasses import dataclass

from util.errors import DomainError


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    # magnitude of the first omitted term
    tail_estimate: float
    finite_difference: bool = False

    def __post_init__(self):
        if self.terms_used < 1:
            raise DomainError(f"terms_used must be >= 1, got {self.terms_used}")
        if self.tail_estimate < 0:
            raise DomainError(f"tail_estimate must be >= 0, got {self.tail_estimate}")
