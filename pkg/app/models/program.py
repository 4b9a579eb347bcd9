"""
app.models.program
------------------

Program-level containers: procedure definitions, parsed source programs, the
program database 𝒫 (definitions plus store) and the thread pool ∥(Γ,G,Δ).

Everything here is immutable. A run advances by building new `ProgramDB` and
`ThreadPool` values, which lets the explorer branch on a state without
copying it.
"""

from dataclasses import dataclass, field, replace
from typing import Tuple

from app.models.ast import Statement
from app.models.store import Store, EMPTY_STORE


@dataclass(frozen=True)
class Definition:
    """
    A D-formula `proc name(params) = body`.

    Attributes:
        name (str): Procedure name.
        params (tuple[str, ...]): Pairwise distinct parameter names.
        body (Statement): Procedure body.
    """
    name: str
    params: Tuple[str, ...]
    body: Statement

    @property
    def arity(self):
        return len(self.params)


@dataclass(frozen=True)
class SourceProgram:
    """A parsed `.cpar` file: definitions and the initial thread pool."""
    definitions: Tuple[Definition, ...] = ()
    main: Tuple[Statement, ...] = ()


@dataclass(frozen=True)
class ProgramDB:
    """The program 𝒫: immutable definitions and the current store θ."""
    definitions: Tuple[Definition, ...] = ()
    store: Store = field(default=EMPTY_STORE)

    def with_store(self, store):
        return replace(self, store=store)


@dataclass(frozen=True)
class Thread:
    """
    One thread of the pool.

    Attributes:
        id (int): Position in `main` at start; kept when a call is unfolded.
        continuation (tuple[Statement, ...]): Pending statements, front first.
    """
    id: int
    continuation: Tuple[Statement, ...]

    @property
    def head(self):
        return self.continuation[0]

    @property
    def complete(self):
        return not self.continuation


@dataclass(frozen=True)
class ThreadPool:
    """Ordered live threads; completed threads are dropped."""
    threads: Tuple[Thread, ...] = ()

    @classmethod
    def from_main(cls, main):
        """Build the initial pool, one thread per statement of `main`."""
        return cls(tuple(
            Thread(index, (statement,)) for index, statement in enumerate(main)
        ))

    def get(self, thread_id):
        for thread in self.threads:
            if thread.id == thread_id:
                return thread
        raise KeyError(thread_id)

    def ids(self):
        return [thread.id for thread in self.threads]

    def update(self, thread):
        """Replace a thread by id, dropping it if it has completed."""
        threads = []
        for current in self.threads:
            if current.id != thread.id:
                threads.append(current)
            elif not thread.complete:
                threads.append(thread)
        return ThreadPool(tuple(threads))

    def __len__(self):
        return len(self.threads)

    def __bool__(self):
        return bool(self.threads)
