import enum
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional

from PyCayley_Cohomology._complex import BettiTable, ChainMap, cohomology, cone


class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    NOT_APPLICABLE = "NOT-APPLICABLE"
    INVALID_INSTANCE = "INVALID-INSTANCE"

    def is_success(self) -> bool:
        return self in (Status.PASS, Status.NOT_APPLICABLE)


@dataclass
class Report:
    """
    Outcome of one check on one instance.

    ``left`` and ``right`` are the two Betti tables being compared, already
    on a common grading; a FAIL always records the degrees where they differ.
    """

    instance: str
    check: str
    status: Status
    left: Optional[BettiTable] = None
    right: Optional[BettiTable] = None
    trace: Optional[str] = None
    elapsed: float = 0.0
    detail: str = ""
    extra: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def compare(cls, instance: str, check: str, left: BettiTable, right: BettiTable, **kwargs) -> "Report":
        status = Status.PASS if left == right else Status.FAIL
        return cls(instance, check, status, left, right, **kwargs)

    @property
    def differing_degrees(self) -> List[int]:
        if self.left is None or self.right is None:
            return []
        return self.left.differing_degrees(self.right)

    def fail_on(self, left: BettiTable, right: BettiTable, detail: str) -> None:
        """
        Demote to FAIL with ``left``/``right`` as the witnessing tables. The
        tables compared before are kept under ``extra["compared"]``.
        """
        if left == right:
            raise ValueError(f"a FAIL needs differing tables, got {left} twice")
        if self.left is not None and self.right is not None:
            self.extra.setdefault("compared", {"left": _table_json(self.left), "right": _table_json(self.right)})
        self.status = Status.FAIL
        self.left = left
        self.right = right
        self.detail = detail

    def certify(self, f: ChainMap) -> None:
        """Record whether ``f`` is a quasi-isomorphism; if not, its cone's cohomology witnesses the FAIL."""
        defect = cohomology(cone(f))
        self.extra["comparison_map"] = "quasi-isomorphism" if defect.is_zero() else "not a quasi-isomorphism"
        if defect.is_zero():
            return
        if self.status is Status.FAIL:
            self.detail = "the comparison map is not a quasi-isomorphism either"
        else:
            self.fail_on(defect, BettiTable(), "the cone of the comparison map is not acyclic")

    def to_json(self, timing: bool = False) -> Dict[str, Any]:
        data = {
            "instance": self.instance,
            "check": self.check,
            "status": self.status.value,
            "left": _table_json(self.left),
            "right": _table_json(self.right),
            "differing_degrees": self.differing_degrees,
            "detail": self.detail,
        }
        if self.trace is not None:
            data["trace"] = self.trace
        if self.extra:
            data["extra"] = self.extra
        if timing:
            data["elapsed"] = round(self.elapsed, 6)
        return data


def _table_json(table: Optional[BettiTable]) -> Optional[Dict[str, int]]:
    if table is None:
        return None
    return {str(m): v for m, v in table.items()}


class Stopwatch:
    elapsed: float = 0.0


@contextmanager
def timed() -> Iterator[Stopwatch]:
    watch = Stopwatch()
    start = time.perf_counter()
    try:
        yield watch
    finally:
        watch.elapsed = time.perf_counter() - start
