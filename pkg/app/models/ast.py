"""
app.models.ast
--------------

Syntax tree of the C∥ language.

G-formulas (statements) are `true`, procedure calls, assignments, sequential
composition `;(...)`, block-sequential composition `#(...)` and `repeat(...)`.
Expressions cover integer and symbol constants, variable references, array
elements and binary `+ - *`. All nodes are frozen dataclasses so that trees
compare structurally and can be shared between thread continuations.
"""

from dataclasses import dataclass
from typing import Tuple, Union

from app.models.values import Value


# Expressions ---------------------------------------------------------------

@dataclass(frozen=True)
class Const:
    """A literal value: an integer or a symbol such as `tom`."""
    value: Value


@dataclass(frozen=True)
class Name:
    """A variable reference, or a parameter reference inside a body."""
    ident: str


@dataclass(frozen=True)
class Elem:
    """An array element `name[index]`."""
    name: str
    index: "Expr"


@dataclass(frozen=True)
class BinOp:
    """Binary arithmetic; `op` is one of `+`, `-`, `*`."""
    op: str
    left: "Expr"
    right: "Expr"


Expr = Union[Const, Name, Elem, BinOp]
LValue = Union[Name, Elem]


# Statements ----------------------------------------------------------------

@dataclass(frozen=True)
class TrueStmt:
    """The statement `true`."""


@dataclass(frozen=True)
class Call:
    """A procedure call `p(E1, ..., En)`."""
    name: str
    args: Tuple[Expr, ...] = ()


@dataclass(frozen=True)
class Assign:
    """An assignment `x = E` or `a[I] = E`."""
    target: LValue
    expr: Expr


@dataclass(frozen=True)
class Seq:
    """Sequential composition `;(G1, ..., Gn)`."""
    body: Tuple["Statement", ...] = ()


@dataclass(frozen=True)
class Block:
    """Block-sequential composition `#(G1, ..., Gn)`, run atomically."""
    body: Tuple["Statement", ...] = ()


@dataclass(frozen=True)
class Repeat:
    """`repeat(G)`: run G, then the repeat statement again."""
    body: "Statement"


Statement = Union[TrueStmt, Call, Assign, Seq, Block, Repeat]

TRUE = TrueStmt()
