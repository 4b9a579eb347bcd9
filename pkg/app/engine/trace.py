"""
app.engine.trace
----------------

Trace events emitted by the interpreter, one per reduction, and the recorder
that numbers them.
"""

import enum
from dataclasses import dataclass
from typing import Optional, Tuple

from app.models.values import Location, Value, format_value, value_to_json


class Rule(enum.Enum):
    """Reduction rule that produced an event."""
    R1 = 'R1'    # body of a matching definition spliced in place of the call
    R2 = 'R2'    # argument passing
    R3 = 'R3'    # procedure call chosen
    R4 = 'R4'    # true, alone
    R5 = 'R5'    # empty pool: a sequential sub-run succeeded
    R6 = 'R6'    # assignment
    R7 = 'R7'    # empty sequential composition
    R8 = 'R8'    # sequential composition
    R9 = 'R9'    # repeat
    R10 = 'R10'  # empty block
    R11 = 'R11'  # block
    TRUE_ELIM = 'TrueElim'
    SEQ_DECOMPOSE = 'SeqDecompose'


class Mode(enum.Enum):
    """Interpreter mode at the time of the event."""
    CONCURRENT = 'C'
    SEQUENTIAL = 'S'


@dataclass(frozen=True)
class TraceEvent:
    """
    One reduction.

    Attributes:
        step (int): Position in the trace, from 0.
        thread_id (int): Thread that performed the reduction.
        rule (Rule): Rule tag.
        statement (str): Rendered statement that was reduced.
        mode (Mode): Concurrent or sequential mode.
        store_delta (tuple | None): `(location, value)` for assignments only.
    """
    step: int
    thread_id: int
    rule: Rule
    statement: str
    mode: Mode
    store_delta: Optional[Tuple[Location, Value]] = None

    def to_text(self):
        """`step=<n> thread=<id> rule=<tag> mode=<C|S> stmt=<text> [delta=<loc>=<val>]`"""
        text = (
            f"step={self.step} thread={self.thread_id} rule={self.rule.value} "
            f"mode={self.mode.value} stmt={self.statement}"
        )
        if self.store_delta is not None:
            location, value = self.store_delta
            text += f" delta={location}={format_value(value)}"
        return text

    def delta_json(self):
        if self.store_delta is None:
            return None
        location, value = self.store_delta
        return {str(location): value_to_json(value)}


class Trace:
    """
    Append-only event log shared by every reduction of one run.

    With `keep=False` events are numbered but not stored, which is what the
    explorer uses when nobody asked for traces.
    """

    def __init__(self, keep=True, events=None, count=0):
        self.keep = keep
        self.events = list(events or [])
        self.count = count

    def emit(self, thread_id, rule, mode, statement, store_delta=None):
        """Record one event and return it."""
        event = TraceEvent(self.count, thread_id, rule, statement, mode,
                           store_delta)
        self.count += 1
        if self.keep:
            self.events.append(event)
        return event

    def fork(self):
        """Independent copy for a new explorer branch."""
        return Trace(self.keep, self.events, self.count)

    def __iter__(self):
        return iter(self.events)

    def __len__(self):
        return len(self.events)
