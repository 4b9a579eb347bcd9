"""
app.engine
----------

Concurrent/sequential interpreter for C∥ programs, schedule policies and
trace recording.
"""

from .policies import (
    Granularity, EngineConfig, RoundRobin, Random, Script, SplitMix64
)
from .trace import Rule, Mode, TraceEvent, Trace
from .interpreter import (
    RunStatus, RunOutcome, enabled_choices, settle_pool, step,
    run_sequential, run_atomic_block, run
)
