"""
app.models.evaluation
---------------------

Expression evaluation, store update, parameter substitution and procedure
resolution (the backchaining half of the interpreter).

Functions:
    - eval_expr(store, expr): Evaluate an expression against θ.
    - resolve_location(store, target): Turn an lvalue into a Location.
    - store_update(db, location, value): Bind a location in 𝒫.
    - substitute(definition, args): Instantiate a definition body.
    - resolve_definition(db, name, args): First matching definition, instantiated.
"""

from app.errors import (
    OperandTypeError, ArityMismatchError, NoMatchingDefinitionError
)
from app.models.ast import (
    Const, Name, Elem, BinOp, TrueStmt, Call, Assign, Seq, Block, Repeat
)
from app.models.values import Var, ArrayElem, is_int

_OPERATORS = {
    "+": lambda a, b: a + b,
    "-": lambda a, b: a - b,
    "*": lambda a, b: a * b,
}


def _require_int(operator, value):
    if not is_int(value):
        raise OperandTypeError(operator, value)
    return value


def resolve_location(store, target):
    """
    Evaluate the index of an lvalue and return its concrete location.

    Args:
        store (Store): Store used to evaluate an array index.
        target (Name | Elem): Assignment target or element reference.

    Returns:
        Var | ArrayElem: The location denoted by the target.
    """
    if isinstance(target, Name):
        return Var(target.ident)
    index = _require_int("[]", eval_expr(store, target.index))
    return ArrayElem(target.name, index)


def eval_expr(store, expr):
    """
    Evaluate an expression; the store is never modified.

    Raises:
        UnboundLocationError: A referenced location is not bound.
        OperandTypeError: Arithmetic or indexing on a symbol.
    """
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, (Name, Elem)):
        return store.lookup(resolve_location(store, expr))
    if isinstance(expr, BinOp):
        left = _require_int(expr.op, eval_expr(store, expr.left))
        right = _require_int(expr.op, eval_expr(store, expr.right))
        return _OPERATORS[expr.op](left, right)
    raise TypeError(f"not an expression: {expr!r}")


def store_update(db, location, value):
    """Return `db` with `location` bound to `value`, replacing any old binding."""
    return db.with_store(db.store.bind(location, value))


def _subst_expr(expr, env):
    if isinstance(expr, Name):
        if expr.ident in env:
            return Const(env[expr.ident])
        return expr
    if isinstance(expr, Elem):
        return Elem(expr.name, _subst_expr(expr.index, env))
    if isinstance(expr, BinOp):
        return BinOp(
            expr.op, _subst_expr(expr.left, env), _subst_expr(expr.right, env)
        )
    return expr


def _subst_target(target, env):
    # base names of assignment targets are never parameters
    if isinstance(target, Elem):
        return Elem(target.name, _subst_expr(target.index, env))
    return target


def _subst_stmt(statement, env):
    if isinstance(statement, TrueStmt):
        return statement
    if isinstance(statement, Assign):
        return Assign(
            _subst_target(statement.target, env),
            _subst_expr(statement.expr, env)
        )
    if isinstance(statement, Call):
        return Call(
            statement.name,
            tuple(_subst_expr(arg, env) for arg in statement.args)
        )
    if isinstance(statement, Seq):
        return Seq(tuple(_subst_stmt(g, env) for g in statement.body))
    if isinstance(statement, Block):
        return Block(tuple(_subst_stmt(g, env) for g in statement.body))
    if isinstance(statement, Repeat):
        return Repeat(_subst_stmt(statement.body, env))
    raise TypeError(f"not a statement: {statement!r}")


def substitute(definition, args):
    """
    Instantiate a definition body with argument values.

    Every reference to the i-th parameter inside expressions, lvalue indices
    and call arguments becomes a constant for `args[i]`. Procedure names and
    array base names are left alone.

    Args:
        definition (Definition): The procedure to instantiate.
        args (Sequence[Value]): Evaluated actual arguments.

    Returns:
        Statement: The instantiated body.

    Raises:
        ArityMismatchError: If the argument count differs from the arity.
    """
    args = tuple(args)
    if len(args) != definition.arity:
        raise ArityMismatchError(definition.name, definition.arity, len(args))
    if not args:
        return definition.body
    return _subst_stmt(definition.body, dict(zip(definition.params, args)))


def resolve_definition(db, name, args):
    """
    Resolve a call against the program: the first definition in textual order
    with the same name and arity, instantiated with `args`.

    Raises:
        NoMatchingDefinitionError: No definition has that name and arity.
    """
    args = tuple(args)
    for definition in db.definitions:
        if definition.name == name and definition.arity == len(args):
            return substitute(definition, args)
    raise NoMatchingDefinitionError(name, len(args))
