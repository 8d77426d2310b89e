import enum
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import List

from loguru import logger


class Criterion(enum.Enum):
    absolute = "abs"
    relative = "rel"


@dataclass(frozen=True)
class SweepCase:
    params: str
    lhs: float
    rhs: float
    # accuracy floor of this kind of check; the case is judged at max(suite tolerance, floor)
    min_tolerance: float = 0.0
    # reported for inspection only, outside the PASS verdict
    data_only: bool = False

    @property
    def abs_err(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def rel_err(self) -> float:
        """Error relative to the larger side; 0 when both sides are 0."""
        scale = max(abs(self.lhs), abs(self.rhs))
        return 0.0 if scale == 0.0 else self.abs_err / scale

    def error(self, criterion: Criterion) -> float:
        return self.abs_err if criterion is Criterion.absolute else self.rel_err


class _ResultLevel(enum.IntEnum):
    info = 200
    data = 300
    error = 400


@dataclass
class SweepReport:
    suite: str
    tolerance: float
    criterion: Criterion = Criterion.absolute
    cases: List[SweepCase] = field(default_factory=list)

    @property
    def checked(self) -> List[SweepCase]:
        return [c for c in self.cases if not c.data_only]

    @property
    def data(self) -> List[SweepCase]:
        return [c for c in self.cases if c.data_only]

    @property
    def max_abs_err(self) -> float:
        return max((c.abs_err for c in self.checked), default=0.0)

    @property
    def max_rel_err(self) -> float:
        return max((c.rel_err for c in self.checked), default=0.0)

    def tolerance_for(self, case: SweepCase) -> float:
        return max(self.tolerance, case.min_tolerance)

    def case_passed(self, case: SweepCase) -> bool:
        err = case.error(self.criterion)
        return math.isfinite(err) and err <= self.tolerance_for(case)

    @property
    def passed(self) -> bool:
        return all(self.case_passed(c) for c in self.checked)

    @property
    def failures(self) -> List[SweepCase]:
        return [c for c in self.checked if not self.case_passed(c)]

    def to_text(self) -> str:
        lines = []
        for c in self.cases:
            line = f"{c.params}\t{c.lhs!r}\t{c.rhs!r}\t{c.abs_err!r}\t{c.rel_err!r}"
            if c.data_only:
                line += "\tDATA"
            elif c.min_tolerance > self.tolerance:
                line += f"\tTOL={c.min_tolerance!r}"
            lines.append(line)
        lines.append(f"MAX\t{self.max_abs_err!r}\t{self.max_rel_err!r}\t{'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def _level(self, case: SweepCase) -> _ResultLevel:
        if case.data_only:
            return _ResultLevel.data
        return _ResultLevel.info if self.case_passed(case) else _ResultLevel.error

    def log(self):
        log_fns = {
            _ResultLevel.info: logger.info,
            _ResultLevel.data: logger.warning,
            _ResultLevel.error: logger.error,
        }
        results = defaultdict(list)
        for case in self.cases:
            level = self._level(case)
            log_fns[level]("{} {}: {} err {:.3e}", self.suite, case.params, self.criterion.value,
                           case.error(self.criterion))
            if level > _ResultLevel.info:
                results[level].append(case)
        logger.info("Suite {}: {} cases ({} data only), max abs {:.3e}, max rel {:.3e}", self.suite,
                    len(self.cases), len(self.data), self.max_abs_err, self.max_rel_err)
        newline = "\n"
        if (flagged := results.get(_ResultLevel.data)) is not None:
            logger.warning(f"These cases are reported as data, outside the verdict:\n "
                           f"{newline.join(f'{c.params}: {c.error(self.criterion):.3e}' for c in flagged)}")
        if (failed := results.get(_ResultLevel.error)) is not None:
            lines = [f"{c.params}: {c.error(self.criterion):.3e} > {self.tolerance_for(c):g}" for c in failed]
            logger.error(f"These cases exceeded their tolerance:\n {newline.join(lines)}")
