"""
app.explorer.atomicity
----------------------

Atomicity check over traces: sequential-mode events must come in contiguous,
single-threaded runs started by the thread that owns them.
"""

from dataclasses import dataclass, field
from typing import List, Tuple

from app.engine.trace import Mode
from app.explorer.search import explore
from app.logger import logger


def check_atomicity(trace):
    """
    Check that no other thread interleaves with a sequential-mode run.

    Every Sequential event must directly follow an event of the same thread:
    either the Concurrent event that opened the run (a `#` block, a Literal
    `;` head or `repeat`) or an earlier Sequential event of the same run.

    Args:
        trace (Iterable[TraceEvent]): Events in trace order.

    Returns:
        bool: True when every sequential run is contiguous and
        single-threaded; True for an empty trace.
    """
    previous = None
    for event in trace:
        if (event.mode is Mode.SEQUENTIAL and previous is not None
                and previous.thread_id != event.thread_id):
            return False
        previous = event
    return True


@dataclass
class AtomicityReport:
    """
    Atomicity verdict over every explored schedule.

    Attributes:
        atomic (bool): True when every explored trace passed.
        schedules (int): Schedules checked.
        truncated (bool): Exploration hit a bound.
        violations (list[tuple[int, ...]]): Witness scripts of failing traces.
    """
    atomic: bool = True
    schedules: int = 0
    truncated: bool = False
    violations: List[Tuple[int, ...]] = field(default_factory=list)


def check_program(config, program, bounds=None):
    """
    Explore a program and check atomicity on every schedule's trace.

    Returns:
        AtomicityReport: The verdict and the scripts of failing schedules.
    """
    report = AtomicityReport()

    def visit(script, events, _error):
        if not check_atomicity(events):
            report.atomic = False
            report.violations.append(script)

    result = explore(config, program, bounds, on_schedule=visit)
    report.schedules = result.schedules_explored
    report.truncated = result.truncated
    logger.info("Atomicity checked.", atomic=report.atomic,
                schedules=report.schedules,
                violations=len(report.violations))
    return report
