import logging
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from PyCayley_Cohomology._constants import MAX_RANK_ONE_N, MIN_RANK_ONE_N, SUITE_COMMANDS
from PyCayley_Cohomology._cover import verify_final, verify_theorem
from PyCayley_Cohomology._exceptions import CayleyCheckException, UnsupportedParameterException
from PyCayley_Cohomology._grassmann import rank_one_check
from PyCayley_Cohomology._instances import InstanceFile
from PyCayley_Cohomology._report import Report, Status, timed
from PyCayley_Cohomology._resolution import verify_resolution
from PyCayley_Cohomology._rewriter import reduce, step_bound, verify_trace

logger = logging.getLogger(__name__)

INSTANCE_COMMANDS = ("verify-resolution", "verify-final", "verify-theorem", "verify-trace")


@dataclass
class SuiteResult:
    command: str
    reports: List[Report] = field(default_factory=list)

    @property
    def exit_status(self) -> int:
        return 0 if all(report.status.is_success() for report in self.reports) else 1

    def counts(self) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for report in self.reports:
            counts[report.status.value] = counts.get(report.status.value, 0) + 1
        return counts


def invalid_report(name: str, command: str, error: Exception) -> Report:
    return Report(name, command, Status.INVALID_INSTANCE, detail=str(error))


def _not_a_cover(inst: InstanceFile, command: str) -> Report:
    return Report(inst.name, command, Status.NOT_APPLICABLE, detail=f"{inst.kind} instances carry no cover")


def check_instance(command: str, inst: InstanceFile, certify_map: bool = False) -> Report:
    """Run one instance-level check; instance problems become INVALID-INSTANCE reports."""
    try:
        if command == "verify-resolution":
            return verify_resolution(inst.space_pair(), certify_map=certify_map)
        cover = inst.cover()
        if cover is None:
            return _not_a_cover(inst, command)
        if command == "verify-final":
            return verify_final(cover, certify_map=certify_map)
        if command == "verify-theorem":
            return verify_theorem(cover)
        if command == "verify-trace":
            return verify_trace(reduce(cover.r), cover)
    except CayleyCheckException as e:
        logger.warning("%s on %s: %s", command, inst.name, e)
        return invalid_report(inst.name, command, e)
    raise UnsupportedParameterException(f"{command!r} is not an instance check")


def _check_star(arguments: Tuple[str, InstanceFile, bool]) -> Report:
    return check_instance(*arguments)


def reduce_report(r: int) -> Report:
    with timed() as watch:
        trace = reduce(r)
    status = Status.PASS if len(trace.steps) == step_bound(r) else Status.FAIL
    report = Report(f"reduce-r{r}", "reduce", status, trace=trace.render(), elapsed=watch.elapsed)
    report.extra.update({"steps": len(trace.steps), "final": trace.final.render()})
    return report


def compositions(n: int) -> List[Tuple[int, ...]]:
    """All ordered tuples of positive integers summing to n."""
    if n == 0:
        return [()]
    return [(first,) + rest for first in range(1, n + 1) for rest in compositions(n - first)]


def run_suite(
    command: str,
    instances: Sequence[InstanceFile] = (),
    parallel: int = 1,
    certify_map: bool = False,
    r: Optional[int] = None,
    N: Optional[int] = None,
    degrees: Optional[Sequence[int]] = None,
    invalid: Iterable[Report] = (),
) -> SuiteResult:
    """
    Run ``command`` over ``instances`` (or over its parameters for
    ``reduce`` and ``rank-one``). Reports are ordered by instance name,
    whatever the worker scheduling.
    """
    if command not in SUITE_COMMANDS:
        raise UnsupportedParameterException(f"unknown command {command!r}")
    reports: List[Report] = list(invalid)
    if command == "reduce":
        if r is None:
            raise UnsupportedParameterException("reduce needs r")
        reports.append(reduce_report(r))
    elif command == "rank-one":
        if degrees and N is None:
            N = sum(degrees)
        for n in [N] if N is not None else range(MIN_RANK_ONE_N, MAX_RANK_ONE_N + 1):
            for partition in [tuple(degrees)] if degrees else compositions(n):
                reports.append(rank_one_check(n, partition))
    else:
        jobs = [(command, inst, certify_map) for inst in instances]
        if parallel > 1 and len(jobs) > 1:
            with Pool(parallel) as pool:
                reports.extend(pool.map(_check_star, jobs))
        else:
            reports.extend(_check_star(job) for job in jobs)
    reports.sort(key=lambda report: (report.instance, report.check))
    result = SuiteResult(command, reports)
    logger.info("%s: %s", command, ", ".join(f"{k}={v}" for k, v in sorted(result.counts().items())))
    return result


__all__ = [
    "SuiteResult",
    "INSTANCE_COMMANDS",
    "check_instance",
    "reduce_report",
    "compositions",
    "invalid_report",
    "run_suite",
]
