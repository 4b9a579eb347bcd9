"""
app.errors
----------

Exception hierarchy for the C∥ toolchain.

Parse errors carry a source position, execution errors can be annotated with
the thread and statement that raised them, and the remaining classes cover
schedule scripts, step bounds and the assertion mini-language. The CLI maps
these classes to exit codes and the HTTP resources map them to 400 bodies.
"""


class CparError(Exception):
    """Base class for every error raised by the package."""

    def to_dict(self):
        """
        Serialize the error for JSON reports.

        Returns:
            dict: The error kind and its message.
        """
        return {"kind": type(self).__name__, "message": str(self)}


class CparSyntaxError(CparError):
    """
    A source text could not be turned into a syntax tree.

    Attributes:
        line (int): 1-based line of the offending input.
        column (int): 1-based column of the offending input.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f"{line}:{column}: " if line is not None else ""
        super().__init__(f"{where}{message}")

    def to_dict(self):
        data = super().to_dict()
        data.update({"line": self.line, "column": self.column})
        return data


class LexicalError(CparSyntaxError):
    """An unexpected character was found while tokenizing."""

    def __init__(self, char, line, column):
        self.char = char
        super().__init__(f"unexpected character {char!r}", line, column)


class UnexpectedTokenError(CparSyntaxError):
    """A token arrived that the grammar does not allow at this position."""

    def __init__(self, token, expected, line=None, column=None):
        self.token = token
        self.expected = tuple(sorted(expected))
        super().__init__(
            f"unexpected {token}, expected one of: {', '.join(self.expected)}",
            line, column
        )

    def to_dict(self):
        data = super().to_dict()
        data["expected"] = list(self.expected)
        return data


class DuplicateParameterError(CparSyntaxError):
    """A procedure lists the same parameter name twice."""

    def __init__(self, procedure, parameter, line=None, column=None):
        self.procedure = procedure
        self.parameter = parameter
        super().__init__(
            f"duplicate parameter {parameter!r} in procedure {procedure!r}",
            line, column
        )


class PredicateSyntaxError(CparSyntaxError):
    """An assertion or initial-store clause list is malformed."""


class ExecutionError(CparError):
    """
    A reduction has no derivation; the run fails.

    Attributes:
        thread_id (int | None): Thread whose statement failed.
        statement (str | None): Rendered statement that failed.
        store (Store | None): Store at the point of failure.
    """

    thread_id = None
    statement = None
    store = None

    def annotate(self, thread_id, statement):
        """Record where the error happened, keeping the innermost site."""
        if self.thread_id is None:
            self.thread_id = thread_id
            self.statement = statement
        return self

    def to_dict(self):
        data = super().to_dict()
        data.update({"thread": self.thread_id, "statement": self.statement})
        return data


class UnboundLocationError(ExecutionError):
    """A location was read before any assignment bound it."""

    def __init__(self, location):
        self.location = location
        super().__init__(f"unbound location {location}")


class OperandTypeError(ExecutionError):
    """Arithmetic or indexing was attempted on a symbol."""

    def __init__(self, operator, value):
        self.operator = operator
        self.value = value
        super().__init__(f"operator {operator!r} needs an integer, got {value}")


class NoMatchingDefinitionError(ExecutionError):
    """No procedure definition matches a call's name and arity."""

    def __init__(self, name, arity):
        self.name = name
        self.arity = arity
        super().__init__(f"no definition matches {name}/{arity}")


class ArityMismatchError(ExecutionError):
    """A definition was instantiated with the wrong number of arguments."""

    def __init__(self, name, expected, got):
        self.name = name
        self.expected = expected
        self.got = got
        super().__init__(
            f"procedure {name!r} takes {expected} argument(s), got {got}"
        )


class StepLimitExceeded(CparError):
    """
    A sequential sub-run exceeded its internal step bound.

    Attributes:
        limit (int): The bound.
        store (Store | None): Store when the bound was hit.
    """

    store = None

    def __init__(self, limit):
        self.limit = limit
        super().__init__(f"sequential run exceeded {limit} steps")


class ScriptError(CparError):
    """A schedule script cannot drive the run."""
