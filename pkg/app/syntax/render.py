"""
app.syntax.render
-----------------

Pretty-printer for syntax trees. The output is the canonical prefix notation
(`;(...)`, `#(...)`) and parses back to a structurally identical tree.
"""

from functools import singledispatch

from app.models.ast import (
    Const, Name, Elem, BinOp, TrueStmt, Call, Assign, Seq, Block, Repeat
)
from app.models.program import Definition, SourceProgram
from app.models.values import format_value

_PRECEDENCE = {"+": 1, "-": 1, "*": 2}
_ATOM = 3


def _precedence(expr):
    if isinstance(expr, BinOp):
        return _PRECEDENCE[expr.op]
    return _ATOM


def _operand(expr, minimum):
    text = render(expr)
    if _precedence(expr) < minimum:
        return f"({text})"
    return text


@singledispatch
def render(node):
    """
    Render a statement, expression, definition or program as source text.

    Args:
        node: Any syntax tree node, a Definition or a SourceProgram.

    Returns:
        str: Canonical source text.
    """
    raise TypeError(f"cannot render {node!r}")


@render.register
def _(node: Const):
    return format_value(node.value)


@render.register
def _(node: Name):
    return node.ident


@render.register
def _(node: Elem):
    return f"{node.name}[{render(node.index)}]"


@render.register
def _(node: BinOp):
    level = _PRECEDENCE[node.op]
    # left-associative: the right operand needs parentheses at equal level
    left = _operand(node.left, level)
    right = _operand(node.right, level + 1)
    return f"{left} {node.op} {right}"


@render.register
def _(node: TrueStmt):
    return "true"


@render.register
def _(node: Assign):
    return f"{render(node.target)} = {render(node.expr)}"


@render.register
def _(node: Call):
    return f"{node.name}({', '.join(render(arg) for arg in node.args)})"


@render.register
def _(node: Seq):
    return f";({', '.join(render(g) for g in node.body)})"


@render.register
def _(node: Block):
    return f"#({', '.join(render(g) for g in node.body)})"


@render.register
def _(node: Repeat):
    return f"repeat({render(node.body)})"


@render.register
def _(node: Definition):
    return f"proc {node.name}({', '.join(node.params)}) = {render(node.body)}"


@render.register
def _(node: SourceProgram):
    lines = [render(definition) for definition in node.definitions]
    lines.append(f"main ||({', '.join(render(g) for g in node.main)})")
    return "\n".join(lines)
