"""
test_syntax.py
--------------
Tests for the parser and the pretty-printer: prefix and infix notation,
identifier classification, error reporting and the render/parse round trip.
"""

import pytest
from hypothesis import given, settings, strategies as st

from app.errors import (
    LexicalError, UnexpectedTokenError, DuplicateParameterError,
    CparSyntaxError
)
from app.models import (
    Const, Name, Elem, BinOp, TRUE, Call, Assign, Seq, Block, Repeat,
    Definition, Symbol
)
from app.syntax import parse_program, parse_statement, render

SIGNUP = """
proc signup(person) = (N = N + 1 # list[N] = person)
main ||(signup(tom), signup(bill))
"""

CORPUS = [
    "signup.cpar", "signup_racy.cpar", "empty.cpar", "single.cpar",
    "loop.cpar", "granularity_split.cpar", "two_by_two.cpar",
    "three_singles.cpar", "nested_blocks.cpar", "unbound.cpar",
    "rules/r01_unfold.cpar", "rules/r02_arguments.cpar",
    "rules/r03_first_match.cpar", "rules/r04_true.cpar",
    "rules/r05_empty_pool.cpar", "rules/r06_assign.cpar",
    "rules/r07_empty_seq.cpar", "rules/r08_seq.cpar",
    "rules/r09_repeat.cpar", "rules/r10_empty_block.cpar",
    "rules/r11_block.cpar",
]


############################################################
# parse_program
############################################################
def test_parse_signup():
    """The signup program has one definition with a block body."""
    program = parse_program(SIGNUP)
    assert len(program.definitions) == 1
    definition = program.definitions[0]
    assert definition == Definition(
        "signup", ("person",),
        Block((
            Assign(Name("N"), BinOp("+", Name("N"), Const(1))),
            Assign(Elem("list", Name("N")), Name("person")),
        ))
    )
    assert program.main == (
        Call("signup", (Const(Symbol("tom")),)),
        Call("signup", (Const(Symbol("bill")),)),
    )


def test_parse_empty_pool():
    """`main ||()` has no definitions and no threads."""
    program = parse_program("main ||()")
    assert program.definitions == ()
    assert program.main == ()


def test_prefix_and_infix_block_coincide():
    """`#(...)` and `(... # ...)` build the same tree."""
    prefix = parse_program("main ||(#(x = 1, y = x))")
    infix = parse_program("main ||((x = 1 # y = x))")
    assert prefix == infix


def test_prefix_and_infix_seq_coincide():
    """`;(...)` and `(... ; ...)` build the same tree."""
    prefix = parse_statement(";(a = 1, b = 2, c = 3)")
    infix = parse_statement("(a = 1 ; b = 2 ; c = 3)")
    assert prefix == infix
    assert isinstance(prefix, Seq)
    assert len(prefix.body) == 3


def test_comments_are_ignored():
    """`%` starts a comment running to the end of the line."""
    program = parse_program("% header\nmain ||(x = 1) % trailing\n")
    assert program.main == (Assign(Name("x"), Const(1)),)


def test_calls_to_unknown_procedures_still_parse():
    """Resolution is a runtime concern."""
    program = parse_program("main ||(missing(1, 2))")
    assert program.main == (Call("missing", (Const(1), Const(2))),)


def test_definitions_keep_textual_order():
    """Definitions are returned in source order."""
    program = parse_program(
        "proc p() = a = 1\nproc q(x) = b = x\nproc p() = a = 2\nmain ||()"
    )
    assert [d.name for d in program.definitions] == ["p", "q", "p"]
    assert program.definitions[1].params == ("x",)


############################################################
# identifier classification
############################################################
def test_lowercase_unassigned_identifiers_are_symbols():
    """`tom` is a symbol; `x` is assigned somewhere and stays a variable."""
    program = parse_program("main ||(x = 1, y = x, z = tom)")
    assert program.main[1] == Assign(Name("y"), Name("x"))
    assert program.main[2] == Assign(Name("z"), Const(Symbol("tom")))


def test_externally_bound_names_are_variables():
    """Names bound by an initial store are read, not taken as symbols."""
    program = parse_program("main ||(y = count + 1)", variables={"count"})
    assert program.main[0] == Assign(
        Name("y"), BinOp("+", Name("count"), Const(1))
    )
    assert parse_statement("y = count", variables=["count"]) == \
        Assign(Name("y"), Name("count"))
    assert parse_statement("y = count") == \
        Assign(Name("y"), Const(Symbol("count")))


def test_uppercase_identifiers_are_variables():
    """Identifiers starting with an uppercase letter are never symbols."""
    statement = parse_statement("y = Total + 1")
    assert statement == Assign(Name("y"), BinOp("+", Name("Total"), Const(1)))


def test_parameters_are_not_symbols():
    """A parameter in scope stays a reference inside its body."""
    program = parse_program("proc p(who) = x = who\nmain ||(p(who))")
    assert program.definitions[0].body == Assign(Name("x"), Name("who"))
    # outside the definition the same identifier is a symbol
    assert program.main[0] == Call("p", (Const(Symbol("who")),))


def test_array_base_names_are_variables():
    """An array written anywhere makes its elements variable references."""
    statement = parse_statement(";(list[1] = tom, x = list[1])")
    assert statement.body[1] == Assign(Name("x"), Elem("list", Const(1)))


############################################################
# expressions
############################################################
@pytest.mark.parametrize("text,expected", [
    ("x = 1 + 2 * 3",
     BinOp("+", Const(1), BinOp("*", Const(2), Const(3)))),
    ("x = (1 + 2) * 3",
     BinOp("*", BinOp("+", Const(1), Const(2)), Const(3))),
    ("x = 5 - 2 - 1",
     BinOp("-", BinOp("-", Const(5), Const(2)), Const(1))),
    ("x = -4", Const(-4)),
    ("x = -Y", BinOp("-", Const(0), Name("Y"))),
    ("x = a[Y + 1]", Elem("a", BinOp("+", Name("Y"), Const(1)))),
])
def test_expression_shapes(text, expected):
    """Standard precedence and left associativity."""
    statement = parse_statement(text)
    assert statement.expr == expected


############################################################
# parse_statement
############################################################
@pytest.mark.parametrize("text,expected", [
    ("true", TRUE),
    (";()", Seq(())),
    ("#()", Block(())),
    ("repeat(x = x + 1)",
     Repeat(Assign(Name("x"), BinOp("+", Name("x"), Const(1))))),
    ("p()", Call("p", ())),
    ("(x = 1)", Assign(Name("x"), Const(1))),
])
def test_parse_statement(text, expected):
    """Single statements parse to their node."""
    assert parse_statement(text) == expected


############################################################
# errors
############################################################
def test_lexical_error_reports_character_and_position():
    """An unknown character is reported with its position."""
    with pytest.raises(LexicalError) as excinfo:
        parse_program("main ||(x = $)")
    err = excinfo.value
    assert err.char == "$"
    assert (err.line, err.column) == (1, 13)


def test_syntax_error_reports_expected_tokens():
    """An unexpected token lists what the grammar would accept."""
    with pytest.raises(UnexpectedTokenError) as excinfo:
        parse_program("main ||(x = )")
    err = excinfo.value
    assert err.line == 1
    assert err.column == 13
    assert "NAME" in err.expected
    assert "INT" in err.expected
    assert err.to_dict()["expected"] == list(err.expected)


def test_syntax_error_at_end_of_input():
    """A truncated program fails with an expected-token set."""
    with pytest.raises(UnexpectedTokenError) as excinfo:
        parse_program("main ||(x = 1")
    assert excinfo.value.token == "end of input"
    assert excinfo.value.expected


def test_missing_main_is_a_syntax_error():
    """A program needs a `main` pool."""
    with pytest.raises(CparSyntaxError):
        parse_program("proc p() = true")


def test_duplicate_parameter():
    """Parameter names must be pairwise distinct."""
    with pytest.raises(DuplicateParameterError) as excinfo:
        parse_program("proc p(a, b, a) = true\nmain ||()")
    assert excinfo.value.procedure == "p"
    assert excinfo.value.parameter == "a"
    assert excinfo.value.line == 1


def test_mixed_infix_operators_are_rejected():
    """`;` and `#` cannot be mixed inside one parenthesized group."""
    with pytest.raises(UnexpectedTokenError):
        parse_statement("(a = 1 ; b = 2 # c = 3)")


############################################################
# render
############################################################
def test_render_canonicalizes_infix_block():
    """Infix blocks render in prefix form."""
    assert render(parse_statement("(a = 1 # b = 2)")) == "#(a = 1, b = 2)"


def test_render_true():
    """`true` renders as itself."""
    assert render(TRUE) == "true"


@pytest.mark.parametrize("text", [
    "x = 1 - (2 - 3)",
    "x = (1 + 2) * 3",
    "x = 1 + 2 * 3",
    "x = a[i * (j + 1)]",
])
def test_render_keeps_needed_parentheses(text):
    """Rendering an expression and parsing it back gives the same tree."""
    statement = parse_statement(text)
    assert parse_statement(render(statement)) == statement


def test_render_program():
    """Programs render as definition lines followed by the main pool."""
    text = render(parse_program(SIGNUP))
    assert text == (
        "proc signup(person) = #(N = N + 1, list[N] = person)\n"
        "main ||(signup(tom), signup(bill))"
    )


@pytest.mark.parametrize("name", CORPUS)
def test_round_trip_fixture_corpus(program, name):
    """parse(render(p)) == p for every program of the corpus."""
    parsed = program(name)
    assert parse_program(render(parsed)) == parsed


############################################################
# round trip over generated trees
############################################################
_variables = st.sampled_from(["X", "Y", "Z", "N"])
_arrays = st.sampled_from(["list", "A"])
_constants = st.one_of(
    st.integers(min_value=-50, max_value=50).map(Const),
    st.sampled_from(["tom", "bill"]).map(lambda s: Const(Symbol(s))),
)
_expressions = st.recursive(
    st.one_of(_constants, _variables.map(Name)),
    lambda inner: st.one_of(
        st.builds(BinOp, st.sampled_from(["+", "-", "*"]), inner, inner),
        st.builds(Elem, _arrays, inner),
    ),
    max_leaves=8,
)
_targets = st.one_of(
    _variables.map(Name), st.builds(Elem, _arrays, _expressions)
)
_statements = st.recursive(
    st.one_of(
        st.just(TRUE),
        st.builds(Assign, _targets, _expressions),
        st.builds(Call, st.sampled_from(["p", "q"]),
                  st.lists(_expressions, max_size=3).map(tuple)),
    ),
    lambda inner: st.one_of(
        st.builds(Seq, st.lists(inner, max_size=3).map(tuple)),
        st.builds(Block, st.lists(inner, max_size=3).map(tuple)),
        st.builds(Repeat, inner),
    ),
    max_leaves=10,
)


@settings(max_examples=200, deadline=None)
@given(_statements)
def test_round_trip_generated_statements(statement):
    """Every generated statement survives render then parse."""
    assert parse_statement(render(statement)) == statement
