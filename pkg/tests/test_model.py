"""
test_model.py
-------------
Tests for the runtime data model: values, the store, evaluation, store
update, parameter substitution, definition resolution and thread pools.
"""

import pytest

from app.errors import (
    UnboundLocationError, OperandTypeError, ArityMismatchError,
    NoMatchingDefinitionError
)
from app.models import (
    Symbol, Var, ArrayElem, Store, EMPTY_STORE, Const, Name, Elem, BinOp,
    TRUE, Call, Assign, Seq, ProgramDB, Thread, ThreadPool, eval_expr,
    resolve_location, store_update, substitute, resolve_definition
)
from app.syntax import parse_program, parse_statement, render

SIGNUP = parse_program(
    "proc signup(person) = (N = N + 1 # list[N] = person)\nmain ||()"
)
TOM = Symbol("tom")
BILL = Symbol("bill")


############################################################
# values and store
############################################################
def test_symbols_compare_by_name():
    """Symbols with the same name are equal; symbols never equal ints."""
    assert Symbol("tom") == TOM
    assert Symbol("tom") != BILL
    assert Symbol("1") != 1


def test_store_canonical_order():
    """Locations sort by name, array elements by name then index."""
    store = Store({
        ArrayElem("list", 10): BILL,
        Var("N"): 2,
        ArrayElem("list", 2): TOM,
        Var("list"): 0,
        Var("a"): -1,
    })
    assert store.canonical() == "{N=2, a=-1, list=0, list[2]=tom, list[10]=bill}"
    assert str(EMPTY_STORE) == "{}"


def test_store_to_json():
    """Integers stay numbers, symbols become strings."""
    store = Store({Var("x"): 1, ArrayElem("list", 2): TOM})
    assert store.to_json() == {"x": 1, "list[2]": "tom"}


def test_store_is_immutable():
    """bind returns a new store."""
    store = EMPTY_STORE.bind(Var("x"), 1)
    assert Var("x") not in EMPTY_STORE
    assert store.lookup(Var("x")) == 1
    assert len(store) == 1


def test_store_lookup_unbound():
    """Reading an unbound location raises."""
    with pytest.raises(UnboundLocationError) as excinfo:
        EMPTY_STORE.lookup(Var("N"))
    assert excinfo.value.location == Var("N")


def test_equal_stores_hash_equal():
    """Stores built in different orders are equal and hash alike."""
    first = EMPTY_STORE.bind(Var("x"), 1).bind(Var("y"), 2)
    second = EMPTY_STORE.bind(Var("y"), 2).bind(Var("x"), 1)
    assert first == second
    assert hash(first) == hash(second)
    assert len({first, second}) == 1


############################################################
# eval_expr
############################################################
def test_eval_arithmetic():
    """eval({N=1}, N + 1) == 2."""
    store = Store({Var("N"): 1})
    assert eval_expr(store, BinOp("+", Name("N"), Const(1))) == 2


def test_eval_literal():
    """Literals evaluate to themselves."""
    assert eval_expr(EMPTY_STORE, Const(7)) == 7
    assert eval_expr(EMPTY_STORE, Const(TOM)) == TOM


def test_eval_unbound_variable():
    """Reading N from the empty store fails."""
    with pytest.raises(UnboundLocationError):
        eval_expr(EMPTY_STORE, Name("N"))


def test_eval_array_element():
    """The index is evaluated before the lookup."""
    store = Store({Var("N"): 2, ArrayElem("list", 2): BILL})
    assert eval_expr(store, Elem("list", Name("N"))) == BILL


def test_eval_arithmetic_on_symbol():
    """Arithmetic needs integers."""
    with pytest.raises(OperandTypeError) as excinfo:
        eval_expr(EMPTY_STORE, BinOp("*", Const(TOM), Const(2)))
    assert excinfo.value.operator == "*"


def test_symbol_index_is_rejected():
    """Array indices must be integers."""
    with pytest.raises(OperandTypeError):
        resolve_location(EMPTY_STORE, Elem("list", Const(TOM)))


def test_eval_does_not_touch_store():
    """Evaluation is pure."""
    store = Store({Var("x"): 3})
    eval_expr(store, BinOp("*", Name("x"), Name("x")))
    assert store == Store({Var("x"): 3})


def test_negative_indices_are_locations():
    """Arrays are sparse maps; negative indices are legal."""
    assert resolve_location(EMPTY_STORE, Elem("a", Const(-1))) == ArrayElem("a", -1)


############################################################
# store_update
############################################################
@pytest.mark.parametrize("before,location,value,after", [
    ({}, Var("x"), 1, {Var("x"): 1}),
    ({Var("x"): 1}, Var("x"), 2, {Var("x"): 2}),
    ({ArrayElem("list", 2): TOM}, ArrayElem("list", 2), BILL,
     {ArrayElem("list", 2): BILL}),
    ({Var("y"): 5}, Var("x"), 1, {Var("x"): 1, Var("y"): 5}),
])
def test_store_update(before, location, value, after):
    """Updates replace any previous binding and leave the rest alone."""
    db = ProgramDB((), Store(before))
    assert store_update(db, location, value).store == Store(after)


############################################################
# substitute and resolve_definition
############################################################
def test_substitute_signup():
    """person ↦ tom inside the block."""
    body = substitute(SIGNUP.definitions[0], [TOM])
    assert render(body) == "#(N = N + 1, list[N] = tom)"


def test_substitute_no_parameters():
    """A definition without parameters returns its body."""
    definition = parse_program("proc p() = true\nmain ||()").definitions[0]
    assert substitute(definition, []) == TRUE


def test_substitute_arity_mismatch():
    """Wrong argument counts raise ArityMismatchError."""
    with pytest.raises(ArityMismatchError) as excinfo:
        substitute(SIGNUP.definitions[0], [])
    err = excinfo.value
    assert (err.name, err.expected, err.got) == ("signup", 1, 0)


def test_substitute_reaches_indices_and_call_arguments():
    """Parameters inside lvalue indices and call arguments are replaced."""
    definition = parse_program(
        "proc p(i, v) = ;(a[i + 1] = v, q(i * 2))\nmain ||()"
    ).definitions[0]
    body = substitute(definition, [3, TOM])
    assert body == Seq((
        Assign(Elem("a", BinOp("+", Const(3), Const(1))), Const(TOM)),
        Call("q", (BinOp("*", Const(3), Const(2)),)),
    ))


def test_substitute_leaves_array_base_names():
    """A parameter never renames an array or a procedure."""
    definition = parse_program(
        "proc p(list) = list[1] = list\nmain ||()"
    ).definitions[0]
    body = substitute(definition, [7])
    assert body == Assign(Elem("list", Const(1)), Const(7))


def test_resolve_definition_signup():
    """signup(tom) resolves to the instantiated body."""
    db = ProgramDB(SIGNUP.definitions)
    body = resolve_definition(db, "signup", [TOM])
    assert body == substitute(SIGNUP.definitions[0], [TOM])


def test_resolve_definition_missing():
    """No definition: NoMatchingDefinitionError."""
    with pytest.raises(NoMatchingDefinitionError) as excinfo:
        resolve_definition(ProgramDB(), "p", [])
    assert (excinfo.value.name, excinfo.value.arity) == ("p", 0)


def test_resolve_definition_first_match():
    """The first definition in textual order wins."""
    program = parse_program("proc p() = ;(a = 1)\nproc p() = ;(a = 2)\nmain ||()")
    body = resolve_definition(ProgramDB(program.definitions), "p", [])
    assert body == parse_statement(";(a = 1)")


def test_resolve_definition_matches_arity():
    """A definition with the wrong arity is skipped."""
    program = parse_program("proc p() = a = 0\nproc p(x) = a = x\nmain ||()")
    body = resolve_definition(ProgramDB(program.definitions), "p", [5])
    assert body == Assign(Name("a"), Const(5))


def test_resolve_definition_is_deterministic():
    """Identical inputs give identical statements."""
    db = ProgramDB(SIGNUP.definitions)
    assert resolve_definition(db, "signup", [BILL]) == \
        resolve_definition(db, "signup", [BILL])


############################################################
# thread pool
############################################################
def test_pool_from_main_assigns_positional_ids():
    """Thread ids are positions in main."""
    pool = ThreadPool.from_main((TRUE, TRUE, TRUE))
    assert pool.ids() == [0, 1, 2]
    assert pool.get(1).head == TRUE


def test_pool_update_drops_completed_threads():
    """A thread with an empty continuation leaves the pool."""
    pool = ThreadPool.from_main((TRUE, TRUE))
    pool = pool.update(Thread(0, ()))
    assert pool.ids() == [1]
    assert len(pool) == 1
    assert bool(ThreadPool()) is False


def test_pool_get_unknown_thread():
    """Unknown ids raise KeyError."""
    with pytest.raises(KeyError):
        ThreadPool().get(3)
