"""
app.models.values
-----------------

Runtime values and store locations.

A value is either a Python `int` or a `Symbol`. Symbols compare by name and
never equal an integer. Locations are plain variables or array elements with
an already evaluated integer index.
"""

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Symbol:
    """An interned symbolic constant such as `tom`."""
    name: str

    def __str__(self):
        return self.name


Value = Union[int, Symbol]


def is_int(value):
    """Return True for integer values (booleans are not values)."""
    return isinstance(value, int) and not isinstance(value, bool)


def format_value(value):
    """Render a value the way the surface syntax writes it."""
    if isinstance(value, Symbol):
        return value.name
    return str(value)


def value_to_json(value):
    """Integers stay numbers, symbols become strings."""
    if isinstance(value, Symbol):
        return value.name
    return value


@dataclass(frozen=True)
class Var:
    """Location of a plain variable."""
    name: str

    def __str__(self):
        return self.name

    def sort_key(self):
        """Variables sort before elements of an array with the same name."""
        return (self.name, 0, 0)


@dataclass(frozen=True)
class ArrayElem:
    """Location of an array element; the index is always concrete."""
    name: str
    index: int

    def __str__(self):
        return f"{self.name}[{self.index}]"

    def sort_key(self):
        return (self.name, 1, self.index)


Location = Union[Var, ArrayElem]
