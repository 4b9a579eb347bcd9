"""
app.engine.policies
-------------------

Schedule policies: the "predetermined algorithm" that picks the next thread
in concurrent mode, and the engine configuration that carries one.

A policy is an immutable value. Each run asks it for a fresh scheduler, so
two runs with the same policy make the same choices.
"""

import enum
from dataclasses import dataclass, field
from typing import Tuple

from app.errors import ScriptError
from app.logger import logger
from app.models.store import Store, EMPTY_STORE

MASK64 = (1 << 64) - 1


class Granularity(enum.Enum):
    """
    How much of a `;` or `repeat` head one scheduling unit consumes.

    Values:
        LITERAL: Run the first element of `;(...)` (or the body of
            `repeat`) to completion in sequential mode.
        FINE: Decompose `;(...)` and unroll `repeat` so that every
            assignment, call and block is its own unit.
    """
    LITERAL = 'literal'
    FINE = 'fine'


class SplitMix64:
    """
    SplitMix64 generator: 64-bit state, golden-ratio increment and the
    standard two-multiply finalizer. Equal seeds give equal sequences on
    every platform.
    """

    def __init__(self, seed):
        self.state = seed & MASK64

    def next(self):
        """Advance the state and return the next 64-bit value."""
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


class Scheduler:
    """Per-run state of a policy."""

    def choose(self, choices):
        """Pick one id out of the non-empty list of enabled thread ids."""
        raise NotImplementedError

    def finish(self):
        """Called once when the run halts."""


class _RoundRobinScheduler(Scheduler):
    def __init__(self):
        self.last = None

    def choose(self, choices):
        later = [tid for tid in choices if self.last is None or tid > self.last]
        self.last = min(later) if later else min(choices)
        return self.last


class _RandomScheduler(Scheduler):
    def __init__(self, seed):
        self.generator = SplitMix64(seed)

    def choose(self, choices):
        return choices[self.generator.next() % len(choices)]


class _ScriptScheduler(Scheduler):
    def __init__(self, script):
        self.script = script
        self.position = 0

    def choose(self, choices):
        if self.position >= len(self.script):
            raise ScriptError(
                f"script exhausted after {self.position} choice(s) while "
                f"threads {choices} are runnable"
            )
        chosen = self.script[self.position]
        if chosen not in choices:
            raise ScriptError(
                f"script entry {self.position} names thread {chosen}, "
                f"runnable threads are {choices}"
            )
        self.position += 1
        return chosen

    def finish(self):
        if self.position < len(self.script):
            logger.warning(
                "Schedule script has unused entries.",
                used=self.position,
                length=len(self.script)
            )


@dataclass(frozen=True)
class RoundRobin:
    """Rotate through threads in id order."""
    name = 'round-robin'

    def scheduler(self):
        return _RoundRobinScheduler()


@dataclass(frozen=True)
class Random:
    """Seeded pseudo-random choice: generator value mod number of choices."""
    seed: int = 0
    name = 'random'

    def __post_init__(self):
        if not 0 <= self.seed <= MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")

    def scheduler(self):
        return _RandomScheduler(self.seed)


@dataclass(frozen=True)
class Script:
    """Follow an explicit list of thread ids (a witness schedule)."""
    ids: Tuple[int, ...] = ()
    name = 'script'

    def scheduler(self):
        return _ScriptScheduler(tuple(self.ids))


@dataclass(frozen=True)
class EngineConfig:
    """
    Run-level configuration.

    Attributes:
        granularity (Granularity): Literal or Fine treatment of `;`/`repeat`.
        max_steps (int): Bound on scheduling units per run, and on the
            statements of each sequential sub-run.
        policy: RoundRobin, Random or Script.
        initial_store (Store): θ at start; empty unless set explicitly.
    """
    granularity: Granularity = Granularity.FINE
    max_steps: int = 10000
    policy: object = field(default_factory=RoundRobin)
    initial_store: Store = field(default=EMPTY_STORE)

    def __post_init__(self):
        if self.max_steps <= 0:
            raise ValueError(f"max_steps must be positive, got {self.max_steps}")
