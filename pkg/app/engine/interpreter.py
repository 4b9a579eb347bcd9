"""
app.engine.interpreter
----------------------

The two-mode interpreter.

In concurrent mode a policy picks one runnable thread and `step` consumes one
scheduling unit of it: one `true`, one assignment, one call unfolding, one
repeat unrolling, one whole `#` block, or under Literal granularity one
sequential run of the first element of a `;` head. Sequential mode
(`run_sequential`, `run_atomic_block`) runs a statement to completion with no
other thread present, which is how `#` blocks stay atomic.

Between units every thread is settled: an empty `;()` head is discharged
(R7) and, under Fine granularity, a non-empty `;` head is decomposed into its
first element followed by the rest (SeqDecompose). Settling is recorded in
the trace but is not a unit and offers no scheduling choice.

Functions:
    - enabled_choices(pool): Runnable thread ids in pool order.
    - settle_pool(config, pool, trace): Settle every thread.
    - step(config, db, pool, chosen, trace): One scheduling unit.
    - run_sequential(db, statement, config, trace, thread_id): ∥(G) alone.
    - run_atomic_block(db, body, config, trace, thread_id): `#(...)` body.
    - run(config, program): Full run under the configured policy.
"""

import enum
from collections import deque
from dataclasses import dataclass
from typing import Optional, Tuple

from app.errors import ExecutionError, StepLimitExceeded
from app.logger import logger
from app.models.ast import TrueStmt, Call, Assign, Seq, Block, Repeat
from app.models.evaluation import (
    eval_expr, resolve_location, store_update, resolve_definition
)
from app.models.program import ProgramDB, Thread, ThreadPool
from app.models.store import Store
from app.syntax.render import render
from app.engine.policies import EngineConfig, Granularity
from app.engine.trace import Trace, TraceEvent, Rule, Mode

EMPTY_POOL_TEXT = "||()"


class RunStatus(enum.Enum):
    """How a run halted."""
    SUCCESS = 'success'
    FAILURE = 'failure'
    STEP_LIMIT = 'step_limit'


@dataclass(frozen=True)
class RunOutcome:
    """
    Result of `run`.

    Attributes:
        status (RunStatus): Success, Failure or StepLimit.
        final_store (Store): θ at halt, whatever the status.
        trace (tuple[TraceEvent, ...]): Every event of the run.
        error (ExecutionError | None): The failure, annotated with its thread
            and statement.
        schedule (tuple[int, ...]): Thread chosen at each scheduling unit.
    """
    status: RunStatus
    final_store: Store
    trace: Tuple[TraceEvent, ...]
    error: Optional[ExecutionError] = None
    schedule: Tuple[int, ...] = ()


class _Budget:
    """Statement bound of one sequential sub-run (or one atomic unit)."""

    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self):
        self.used += 1
        if self.used > self.limit:
            raise StepLimitExceeded(self.limit)


def _keep_store(err, db):
    """
    Attach the innermost store to an error; effects made before the failure
    are part of the final store since nothing is rolled back.
    """
    if getattr(err, "store", None) is None:
        err.store = db.store
    return err


def _unfold_call(db, call, thread_id, mode, trace):
    """Backchain on a call: evaluate arguments, resolve, instantiate."""
    text = render(call)
    args = tuple(eval_expr(db.store, arg) for arg in call.args)
    trace.emit(thread_id, Rule.R3, mode, text)
    body = resolve_definition(db, call.name, args)
    if args:
        trace.emit(thread_id, Rule.R2, mode, text)
    trace.emit(thread_id, Rule.R1, mode, render(body))
    return body


def _assign(db, statement, thread_id, mode, trace):
    location = resolve_location(db.store, statement.target)
    value = eval_expr(db.store, statement.expr)
    trace.emit(thread_id, Rule.R6, mode, render(statement), (location, value))
    return store_update(db, location, value)


def _sequential(db, statement, thread_id, trace, budget):
    """
    ex(𝒫, ∥(G), 𝒫′): run one statement to completion in sequential mode.
    """
    mode = Mode.SEQUENTIAL
    pending = deque([statement])
    last_rule = None
    while pending:
        head = pending.popleft()
        try:
            budget.spend()
            if isinstance(head, TrueStmt):
                last_rule = Rule.R4 if not pending else Rule.TRUE_ELIM
                trace.emit(thread_id, last_rule, mode, "true")
            elif isinstance(head, Assign):
                db = _assign(db, head, thread_id, mode, trace)
                last_rule = Rule.R6
            elif isinstance(head, Seq):
                if not head.body:
                    last_rule = Rule.R7
                    trace.emit(thread_id, Rule.R7, mode, render(head))
                else:
                    last_rule = Rule.R8
                    trace.emit(thread_id, Rule.R8, mode, render(head))
                    pending.extendleft((Seq(head.body[1:]), head.body[0]))
            elif isinstance(head, Repeat):
                last_rule = Rule.R9
                trace.emit(thread_id, Rule.R9, mode, render(head))
                pending.extendleft((head, head.body))
            elif isinstance(head, Block):
                last_rule = Rule.R11 if head.body else Rule.R10
                trace.emit(thread_id, last_rule, mode, render(head))
                pending.extendleft(reversed(head.body))
            elif isinstance(head, Call):
                last_rule = Rule.R1
                pending.appendleft(
                    _unfold_call(db, head, thread_id, mode, trace)
                )
            else:
                raise TypeError(f"not a statement: {head!r}")
        except ExecutionError as err:
            raise _keep_store(err.annotate(thread_id, render(head)), db)
        except StepLimitExceeded as err:
            raise _keep_store(err, db)
    if last_rule is not Rule.R4:
        trace.emit(thread_id, Rule.R5, mode, EMPTY_POOL_TEXT)
    return db


def _atomic(db, body, thread_id, trace, budget):
    for statement in body:
        db = _sequential(db, statement, thread_id, trace, budget)
    return db


def run_sequential(db, statement, config=None, trace=None, thread_id=0):
    """
    Execute a statement to completion with no other thread present.

    Args:
        db (ProgramDB): Program before the run.
        statement (Statement): The statement G of ∥(G).
        config (EngineConfig, optional): Supplies the statement bound.
        trace (Trace, optional): Recorder to append Sequential events to.
        thread_id (int): Thread the events are attributed to.

    Returns:
        tuple: `(ProgramDB, list[TraceEvent])`, the new program and the
        events emitted by this call.

    Raises:
        ExecutionError: Evaluation or resolution failed.
        StepLimitExceeded: The bound was reached (e.g. `repeat`).
    """
    config = config or EngineConfig()
    trace = trace if trace is not None else Trace()
    start = len(trace.events)
    db = _sequential(db, statement, thread_id, trace, _Budget(config.max_steps))
    return db, trace.events[start:]


def run_atomic_block(db, body, config=None, trace=None, thread_id=0):
    """
    Execute the elements of a `#` block left to right in sequential mode.

    No interleaving point exists anywhere inside; a failure aborts the run
    and nothing is rolled back. An empty body succeeds with no events.

    Returns:
        tuple: `(ProgramDB, list[TraceEvent])`.
    """
    config = config or EngineConfig()
    trace = trace if trace is not None else Trace()
    start = len(trace.events)
    db = _atomic(db, body, thread_id, trace, _Budget(config.max_steps))
    return db, trace.events[start:]


def enabled_choices(pool):
    """Ids of the threads that still have statements, in pool order."""
    return [thread.id for thread in pool.threads if not thread.complete]


def _settle(config, thread, trace):
    continuation = thread.continuation
    while continuation and isinstance(continuation[0], Seq):
        head = continuation[0]
        if not head.body:
            trace.emit(thread.id, Rule.R7, Mode.CONCURRENT, render(head))
            continuation = continuation[1:]
        elif config.granularity is Granularity.FINE:
            trace.emit(thread.id, Rule.SEQ_DECOMPOSE, Mode.CONCURRENT,
                       render(head))
            continuation = (
                (head.body[0], Seq(head.body[1:])) + continuation[1:]
            )
        else:
            break
    return Thread(thread.id, continuation)


def settle_pool(config, pool, trace):
    """Settle every thread in pool order and drop those that completed."""
    for thread in pool.threads:
        pool = pool.update(_settle(config, thread, trace))
    return pool


def _reduce_head(config, db, pool, thread, trace):
    """Apply the concurrent-mode rule for the thread's head statement."""
    head, rest = thread.head, thread.continuation[1:]
    tid = thread.id
    mode = Mode.CONCURRENT

    if isinstance(head, TrueStmt):
        alone = len(pool) == 1 and not rest
        trace.emit(tid, Rule.R4 if alone else Rule.TRUE_ELIM, mode, "true")
        return db, rest
    if isinstance(head, Assign):
        return _assign(db, head, tid, mode, trace), rest
    if isinstance(head, Call):
        return db, (_unfold_call(db, head, tid, mode, trace),) + rest
    if isinstance(head, Block):
        trace.emit(tid, Rule.R11 if head.body else Rule.R10, mode,
                   render(head))
        return _atomic(db, head.body, tid, trace,
                       _Budget(config.max_steps)), rest
    if isinstance(head, Seq):
        if not head.body:
            trace.emit(tid, Rule.R7, mode, render(head))
            return db, rest
        if config.granularity is Granularity.FINE:
            trace.emit(tid, Rule.SEQ_DECOMPOSE, mode, render(head))
            return db, (head.body[0], Seq(head.body[1:])) + rest
        trace.emit(tid, Rule.R8, mode, render(head))
        db = _sequential(db, head.body[0], tid, trace,
                         _Budget(config.max_steps))
        return db, (Seq(head.body[1:]),) + rest
    if isinstance(head, Repeat):
        trace.emit(tid, Rule.R9, mode, render(head))
        if config.granularity is Granularity.FINE:
            return db, (head.body, head) + rest
        db = _sequential(db, head.body, tid, trace, _Budget(config.max_steps))
        return db, thread.continuation
    raise TypeError(f"not a statement: {head!r}")


def step(config, db, pool, chosen, trace=None):
    """
    Consume one scheduling unit of the chosen thread.

    Args:
        config (EngineConfig): Granularity and statement bound.
        db (ProgramDB): Program before the unit.
        pool (ThreadPool): Pool before the unit.
        chosen (int): Id of a runnable thread.
        trace (Trace, optional): Recorder to append events to.

    Returns:
        tuple: `(ProgramDB, ThreadPool, list[TraceEvent])` after the unit
        and the settlement of the chosen thread; a completed thread is
        removed from the pool.

    Raises:
        ExecutionError: Annotated with the thread and statement.
        StepLimitExceeded: A sequential part of the unit did not terminate.
        ValueError: `chosen` is not in `enabled_choices(pool)`.
    """
    trace = trace if trace is not None else Trace()
    start = len(trace.events)
    if chosen not in enabled_choices(pool):
        raise ValueError(f"thread {chosen} is not runnable")
    thread = pool.get(chosen)
    try:
        db, continuation = _reduce_head(config, db, pool, thread, trace)
    except ExecutionError as err:
        raise _keep_store(err.annotate(thread.id, render(thread.head)), db)
    except StepLimitExceeded as err:
        raise _keep_store(err, db)
    thread = _settle(config, Thread(thread.id, continuation), trace)
    pool = pool.update(thread)
    logger.debug("Step.", thread=chosen, remaining=len(thread.continuation))
    return db, pool, trace.events[start:]


def run(config, program):
    """
    Execute a program concurrently until the pool is empty.

    The program starts from `config.initial_store` (empty by default) with
    one thread per statement of `main`. The policy picks among the runnable
    threads before every unit. After `config.max_steps` units the run halts
    with StepLimit.

    Args:
        config (EngineConfig): Policy, granularity, bound and initial store.
        program (SourceProgram): Parsed program.

    Returns:
        RunOutcome: Status, final store, trace and schedule.

    Raises:
        ScriptError: A Script policy named an unrunnable thread or ran out.
    """
    db = ProgramDB(program.definitions, config.initial_store)
    trace = Trace()
    pool = settle_pool(config, ThreadPool.from_main(program.main), trace)
    scheduler = config.policy.scheduler()
    schedule = []
    status, error = RunStatus.SUCCESS, None
    try:
        while pool:
            if len(schedule) >= config.max_steps:
                status = RunStatus.STEP_LIMIT
                break
            chosen = scheduler.choose(enabled_choices(pool))
            schedule.append(chosen)
            db, pool, _ = step(config, db, pool, chosen, trace)
    except ExecutionError as err:
        status, error = RunStatus.FAILURE, err
        db = db.with_store(err.store)
        logger.warning("Run failed.", error=str(err), thread=err.thread_id,
                       statement=err.statement)
    except StepLimitExceeded as err:
        status = RunStatus.STEP_LIMIT
        db = db.with_store(err.store)
        logger.warning("Sequential run hit the step bound.", limit=err.limit)
    if status is RunStatus.SUCCESS:
        scheduler.finish()
    logger.info(
        "Run finished.",
        status=status.value,
        units=len(schedule),
        events=len(trace),
        policy=config.policy.name,
        granularity=config.granularity.value
    )
    return RunOutcome(status, db.store, tuple(trace.events), error,
                      tuple(schedule))
