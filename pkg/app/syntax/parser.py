"""
app.syntax.parser
-----------------

Parse `.cpar` source text into the syntax tree of `app.models.ast`.

The grammar lives in `grammar.lark` and is compiled once into an LALR parser.
After the tree is built, identifiers in expression position are classified:
an identifier is a symbol constant when it starts with a lowercase letter, is
not a parameter in scope, is not a procedure name and is never the base name
of an assignment target in the parsed text. Everything else stays a variable
(or parameter) reference.
"""

from functools import lru_cache

import lark
from lark import Transformer, v_args
from lark.exceptions import (
    UnexpectedCharacters, UnexpectedToken, UnexpectedEOF, VisitError
)
from lark.lexer import PatternStr

from app.errors import (
    CparSyntaxError, LexicalError, UnexpectedTokenError, DuplicateParameterError
)
from app.logger import logger
from app.models.ast import (
    Const, Name, Elem, BinOp, TRUE, Call, Assign, Seq, Block, Repeat
)
from app.models.program import Definition, SourceProgram
from app.models.values import Symbol


@lru_cache(maxsize=1)
def _parser():
    """Compile the grammar once."""
    return lark.Lark.open(
        "grammar.lark",
        rel_to=__file__,
        parser="lalr",
        start=["start", "statement_only"],
        maybe_placeholders=True,
    )


@v_args(inline=True)
class _ToAst(Transformer):
    """Build AST nodes bottom-up from the Lark parse tree."""

    def start(self, *items):
        return SourceProgram(tuple(items[:-1]), items[-1])

    def statement_only(self, statement):
        return statement

    def definition(self, name, params, body):
        params = params or ()
        seen = set()
        for param in params:
            if str(param) in seen:
                raise DuplicateParameterError(
                    str(name), str(param), param.line, param.column
                )
            seen.add(str(param))
        return Definition(str(name), tuple(str(p) for p in params), body)

    def params(self, *names):
        return tuple(names)

    def pool(self, statements):
        return tuple(statements or ())

    def stmt_list(self, *statements):
        return tuple(statements)

    def expr_list(self, *exprs):
        return tuple(exprs)

    def true(self):
        return TRUE

    def assign(self, target, expr):
        return Assign(target, expr)

    def call(self, name, args):
        return Call(str(name), tuple(args or ()))

    def seq(self, body):
        return Seq(tuple(body or ()))

    def block(self, body):
        return Block(tuple(body or ()))

    def repeat(self, body):
        return Repeat(body)

    def infix_seq(self, *body):
        return Seq(body)

    def infix_block(self, *body):
        return Block(body)

    def lvalue_name(self, name):
        return Name(str(name))

    def lvalue_elem(self, name, index):
        return Elem(str(name), index)

    def add(self, left, right):
        return BinOp("+", left, right)

    def sub(self, left, right):
        return BinOp("-", left, right)

    def mul(self, left, right):
        return BinOp("*", left, right)

    def neg(self, operand):
        if isinstance(operand, Const) and isinstance(operand.value, int):
            return Const(-operand.value)
        return BinOp("-", Const(0), operand)

    def int_lit(self, token):
        return Const(int(token))

    def name(self, token):
        return Name(str(token))

    def elem(self, name, index):
        return Elem(str(name), index)


# Identifier classification -------------------------------------------------

def _assigned_names(statement, out):
    if isinstance(statement, Assign):
        target = statement.target
        out.add(target.ident if isinstance(target, Name) else target.name)
    elif isinstance(statement, (Seq, Block)):
        for child in statement.body:
            _assigned_names(child, out)
    elif isinstance(statement, Repeat):
        _assigned_names(statement.body, out)
    return out


class _Classifier:
    """Rewrite symbol-like `Name` references into symbol constants."""

    def __init__(self, variables, procedures):
        self.variables = variables
        self.procedures = procedures

    def is_symbol(self, ident, params):
        return (
            ident[:1].islower()
            and ident not in params
            and ident not in self.variables
            and ident not in self.procedures
        )

    def expr(self, expr, params):
        if isinstance(expr, Name):
            if self.is_symbol(expr.ident, params):
                return Const(Symbol(expr.ident))
            return expr
        if isinstance(expr, Elem):
            return Elem(expr.name, self.expr(expr.index, params))
        if isinstance(expr, BinOp):
            return BinOp(
                expr.op,
                self.expr(expr.left, params),
                self.expr(expr.right, params)
            )
        return expr

    def stmt(self, statement, params):
        if isinstance(statement, Assign):
            target = statement.target
            if isinstance(target, Elem):
                target = Elem(target.name, self.expr(target.index, params))
            return Assign(target, self.expr(statement.expr, params))
        if isinstance(statement, Call):
            return Call(
                statement.name,
                tuple(self.expr(arg, params) for arg in statement.args)
            )
        if isinstance(statement, Seq):
            return Seq(tuple(self.stmt(g, params) for g in statement.body))
        if isinstance(statement, Block):
            return Block(tuple(self.stmt(g, params) for g in statement.body))
        if isinstance(statement, Repeat):
            return Repeat(self.stmt(statement.body, params))
        return statement


def _classify_program(program, bound=()):
    variables = set(bound)
    for definition in program.definitions:
        _assigned_names(definition.body, variables)
    for statement in program.main:
        _assigned_names(statement, variables)
    classifier = _Classifier(
        variables, {definition.name for definition in program.definitions}
    )
    definitions = tuple(
        Definition(d.name, d.params,
                   classifier.stmt(d.body, frozenset(d.params)))
        for d in program.definitions
    )
    main = tuple(classifier.stmt(g, frozenset()) for g in program.main)
    return SourceProgram(definitions, main)


def _classify_statement(statement, bound=()):
    classifier = _Classifier(_assigned_names(statement, set(bound)), set())
    return classifier.stmt(statement, frozenset())


# Error translation ---------------------------------------------------------

def _describe_terminal(name):
    if name == "$END":
        return "end of input"
    try:
        pattern = _parser().get_terminal(name).pattern
    except KeyError:
        return name
    if isinstance(pattern, PatternStr):
        return repr(pattern.value)
    return name


def _parse_tree(text, start):
    try:
        tree = _parser().parse(text, start=start)
    except UnexpectedCharacters as err:
        raise LexicalError(err.char, err.line, err.column) from None
    except UnexpectedEOF as err:
        raise UnexpectedTokenError(
            "end of input",
            {_describe_terminal(name) for name in err.expected},
            err.line if err.line != -1 else None,
            err.column if err.column != -1 else None,
        ) from None
    except UnexpectedToken as err:
        token = ("end of input" if err.token.type == "$END"
                 else repr(str(err.token)))
        raise UnexpectedTokenError(
            token,
            {_describe_terminal(name) for name in err.expected},
            err.line, err.column
        ) from None
    try:
        return _ToAst().transform(tree)
    except VisitError as err:
        if isinstance(err.orig_exc, CparSyntaxError):
            raise err.orig_exc from None
        raise


def parse_program(text, variables=()):
    """
    Parse a complete `.cpar` source text.

    Args:
        text (str): Source text.
        variables (Iterable[str]): Names bound outside the text, e.g. by an
            initial store; they are never read as symbols.

    Returns:
        SourceProgram: Definitions in textual order and the main pool.

    Raises:
        LexicalError: An unexpected character was found.
        UnexpectedTokenError: The token stream does not fit the grammar.
        DuplicateParameterError: A procedure repeats a parameter name.
    """
    program = _classify_program(_parse_tree(text, "start"), variables)
    logger.debug(
        "Parsed program.",
        definitions=len(program.definitions),
        threads=len(program.main)
    )
    return program


def parse_statement(text, variables=()):
    """Parse a single statement (G-formula)."""
    return _classify_statement(_parse_tree(text, "statement_only"), variables)
