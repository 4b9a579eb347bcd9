"""
app.models
----------

Runtime data model of the C∥ interpreter: syntax tree nodes, values and
locations, the store θ, definitions, the program database and thread pools,
plus expression evaluation and procedure resolution.
"""

from .values import Symbol, Value, Var, ArrayElem, Location, format_value
from .ast import (
    Const, Name, Elem, BinOp, TrueStmt, TRUE, Call, Assign, Seq, Block, Repeat
)
from .store import Store, EMPTY_STORE
from .program import Definition, SourceProgram, ProgramDB, Thread, ThreadPool
from .evaluation import (
    eval_expr, resolve_location, store_update, substitute, resolve_definition
)
