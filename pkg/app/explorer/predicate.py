"""
app.explorer.predicate
----------------------

Store-level assertion mini-language used by `cpar explore --assert` and by
`--init`.

A predicate is a comma-separated conjunction of clauses:

    N=2, defined(list[1]), undefined(list[3]), who=tom

`loc=value` requires the location to be bound to that value, `defined(loc)`
and `undefined(loc)` test presence only. An initial store is written with
`loc=value` clauses alone.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, Union

import lark
from lark import Transformer, v_args
from lark.exceptions import UnexpectedInput

from app.errors import PredicateSyntaxError
from app.models.store import Store
from app.models.values import Symbol, Var, ArrayElem, format_value

_GRAMMAR = r"""
start: [clause ("," clause)*]

?clause: location "=" value          -> equals
       | "defined" "(" location ")"   -> defined
       | "undefined" "(" location ")" -> undefined

location: NAME                       -> var
        | NAME "[" SIGNED_INT "]"    -> elem

value: SIGNED_INT                    -> int_value
     | NAME                          -> symbol_value

NAME: /[A-Za-z_][A-Za-z0-9_]*/

%import common.SIGNED_INT
%import common.WS
%ignore WS
"""


@dataclass(frozen=True)
class Equals:
    location: Union[Var, ArrayElem]
    value: object

    def holds(self, store):
        return (self.location in store
                and store.lookup(self.location) == self.value)

    def __str__(self):
        return f"{self.location}={format_value(self.value)}"


@dataclass(frozen=True)
class Defined:
    location: Union[Var, ArrayElem]

    def holds(self, store):
        return self.location in store

    def __str__(self):
        return f"defined({self.location})"


@dataclass(frozen=True)
class Undefined:
    location: Union[Var, ArrayElem]

    def holds(self, store):
        return self.location not in store

    def __str__(self):
        return f"undefined({self.location})"


@dataclass(frozen=True)
class Predicate:
    """Conjunction of clauses evaluated against a terminal store."""
    clauses: Tuple[Union[Equals, Defined, Undefined], ...] = ()

    def violations(self, store):
        """Clauses that do not hold in `store`."""
        return [clause for clause in self.clauses if not clause.holds(store)]

    def holds(self, store):
        return not self.violations(store)

    def __str__(self):
        return ", ".join(str(clause) for clause in self.clauses)


@v_args(inline=True)
class _ToClauses(Transformer):
    def start(self, *clauses):
        return tuple(clause for clause in clauses if clause is not None)

    def equals(self, location, value):
        return Equals(location, value)

    def defined(self, location):
        return Defined(location)

    def undefined(self, location):
        return Undefined(location)

    def var(self, name):
        return Var(str(name))

    def elem(self, name, index):
        return ArrayElem(str(name), int(index))

    def int_value(self, token):
        return int(token)

    def symbol_value(self, token):
        return Symbol(str(token))


@lru_cache(maxsize=1)
def _parser():
    return lark.Lark(_GRAMMAR, parser="lalr", maybe_placeholders=True)


def _parse_clauses(text):
    try:
        tree = _parser().parse(text)
    except UnexpectedInput as err:
        raise PredicateSyntaxError(
            f"malformed clause list {text!r}",
            getattr(err, "line", None), getattr(err, "column", None)
        ) from None
    return _ToClauses().transform(tree)


def parse_predicate(text):
    """
    Parse an assertion such as `N=2, defined(list[1])`.

    Raises:
        PredicateSyntaxError: The text is not a clause list.
    """
    return Predicate(_parse_clauses(text))


def parse_bindings(text):
    """
    Parse an initial store such as `N=0, list[1]=tom`.

    Returns:
        Store: A store holding exactly the listed bindings.

    Raises:
        PredicateSyntaxError: Malformed text or a non-binding clause.
    """
    bindings = {}
    for clause in _parse_clauses(text):
        if not isinstance(clause, Equals):
            raise PredicateSyntaxError(
                f"only loc=value clauses can initialize a store, got {clause}"
            )
        bindings[clause.location] = clause.value
    return Store(bindings)
