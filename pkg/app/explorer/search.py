"""
app.explorer.search
-------------------

Exhaustive schedule exploration.

Every choice sequence offered by `enabled_choices` at each scheduling unit is
enumerated depth first, lowest thread id first. Terminal stores are
deduplicated by their canonical text; the first schedule reaching a store is
kept as its witness, so replaying the witness with a Script policy gives the
same store. Runtime failures are recorded the same way. Bounds stop the
search and mark the result as truncated.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from app.errors import ExecutionError, StepLimitExceeded
from app.logger import logger
from app.models.program import ProgramDB, ThreadPool
from app.models.store import Store
from app.engine.interpreter import enabled_choices, settle_pool, step
from app.engine.trace import Trace


@dataclass(frozen=True)
class ExploreBounds:
    """
    Limits that keep exploration finite.

    Attributes:
        max_steps_per_run (int): Scheduling units along one schedule.
        max_schedules (int): Completed schedules (successes and failures).
        max_states (int): Search nodes visited.
    """
    max_steps_per_run: int = 10000
    max_schedules: int = 100000
    max_states: int = 1000000

    def __post_init__(self):
        for name in ("max_steps_per_run", "max_schedules", "max_states"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass
class TerminalStore:
    """A distinct terminal store, its witness schedule and multiplicity."""
    store: Store
    witness: Tuple[int, ...]
    count: int = 1


@dataclass
class FailureRecord:
    """A distinct runtime failure, its witness schedule and multiplicity."""
    error: ExecutionError
    witness: Tuple[int, ...]
    count: int = 1

    @property
    def key(self):
        return f"{type(self.error).__name__}: {self.error}"


@dataclass
class ExplorationResult:
    """
    Outcome of `explore`.

    Every completed schedule ends either in a terminal store or in a failure,
    so the store counts plus the failure counts add up to
    `schedules_explored`; the store counts alone do so only when no schedule
    failed.

    Attributes:
        terminal_stores (list[TerminalStore]): In order of discovery.
        failures (list[FailureRecord]): In order of discovery.
        schedules_explored (int): Completed schedules, failed ones included.
        truncated (bool): A bound stopped the search somewhere.
        states_visited (int): Search nodes visited.
    """
    terminal_stores: List[TerminalStore] = field(default_factory=list)
    failures: List[FailureRecord] = field(default_factory=list)
    schedules_explored: int = 0
    truncated: bool = False
    states_visited: int = 0

    def stores(self):
        """The distinct terminal stores."""
        return [entry.store for entry in self.terminal_stores]


@dataclass
class _Node:
    db: ProgramDB
    pool: ThreadPool
    script: Tuple[int, ...]
    trace: Trace
    chosen: Optional[int] = None


class _Collector:
    """Deduplicates leaves and enforces the schedule bound."""

    def __init__(self, on_schedule):
        self.result = ExplorationResult()
        self.on_schedule = on_schedule
        self.stores = {}
        self.failures = {}

    def success(self, node):
        key = node.db.store.canonical()
        if key in self.stores:
            self.stores[key].count += 1
        else:
            entry = TerminalStore(node.db.store, node.script)
            self.stores[key] = entry
            self.result.terminal_stores.append(entry)
        self._complete(node, None)

    def failure(self, node, error):
        record = FailureRecord(error, node.script)
        if record.key in self.failures:
            self.failures[record.key].count += 1
        else:
            self.failures[record.key] = record
            self.result.failures.append(record)
        self._complete(node, error)

    def _complete(self, node, error):
        self.result.schedules_explored += 1
        if self.on_schedule is not None:
            self.on_schedule(node.script, tuple(node.trace.events), error)


def explore(config, program, bounds=None, on_schedule=None):
    """
    Enumerate every schedule of a program.

    Args:
        config (EngineConfig): Granularity, statement bound and initial
            store; the policy is ignored.
        program (SourceProgram): Parsed program.
        bounds (ExploreBounds, optional): Search limits.
        on_schedule (callable, optional): Called as
            `on_schedule(script, events, error)` for every completed
            schedule; events are only recorded when this is given.

    Returns:
        ExplorationResult: Distinct terminal stores with witnesses, failures,
        counters and the truncation flag.
    """
    bounds = bounds or ExploreBounds()
    collector = _Collector(on_schedule)
    result = collector.result

    trace = Trace(keep=on_schedule is not None)
    pool = settle_pool(config, ThreadPool.from_main(program.main), trace)
    db = ProgramDB(program.definitions, config.initial_store)
    stack = [_Node(db, pool, (), trace)]

    while stack:
        if result.states_visited >= bounds.max_states:
            result.truncated = True
            break
        if result.schedules_explored >= bounds.max_schedules:
            result.truncated = True
            break
        node = stack.pop()
        result.states_visited += 1

        if node.chosen is not None:
            node.trace = node.trace.fork()
            node.script = node.script + (node.chosen,)
            try:
                node.db, node.pool, _ = step(
                    config, node.db, node.pool, node.chosen, node.trace
                )
            except ExecutionError as err:
                collector.failure(node, err)
                continue
            except StepLimitExceeded:
                result.truncated = True
                continue

        choices = enabled_choices(node.pool)
        if not choices:
            collector.success(node)
            continue
        if len(node.script) >= bounds.max_steps_per_run:
            result.truncated = True
            continue
        for chosen in reversed(choices):
            stack.append(
                _Node(node.db, node.pool, node.script, node.trace, chosen)
            )

    logger.info(
        "Exploration finished.",
        schedules=result.schedules_explored,
        stores=len(result.terminal_stores),
        failures=len(result.failures),
        states=result.states_visited,
        truncated=result.truncated
    )
    return result
