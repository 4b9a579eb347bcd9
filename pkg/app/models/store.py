"""
app.models.store
----------------

The machine state θ: a finite map from locations to values.

A `Store` is immutable; `bind` returns a new store in which the location is
bound to the new value and any previous binding for it is gone. Stores have a
canonical text form with locations sorted by name (array elements by name
then index), used both for display and as the explorer's deduplication key.
"""

from app.errors import UnboundLocationError
from app.models.values import Var, format_value, value_to_json


class Store:
    """
    Immutable location → value map with replace-on-update semantics.

    Attributes:
        bindings (dict): Read-only view of the current bindings.
    """

    __slots__ = ("_bindings", "_key")

    def __init__(self, bindings=None):
        self._bindings = dict(bindings or {})
        self._key = None

    @property
    def bindings(self):
        """Return a copy of the bindings."""
        return dict(self._bindings)

    def lookup(self, location):
        """
        Read the value bound to a location.

        Raises:
            UnboundLocationError: If the location has never been assigned.
        """
        try:
            return self._bindings[location]
        except KeyError:
            raise UnboundLocationError(location) from None

    def bind(self, location, value):
        """Return a new store in which `location` is bound to `value`."""
        bindings = dict(self._bindings)
        bindings[location] = value
        return Store(bindings)

    def __contains__(self, location):
        return location in self._bindings

    def __len__(self):
        return len(self._bindings)

    def items(self):
        """Bindings in canonical location order."""
        return sorted(self._bindings.items(), key=lambda kv: kv[0].sort_key())

    def variable_names(self):
        """Names of the plain variables bound in this store."""
        return frozenset(
            loc.name for loc in self._bindings if isinstance(loc, Var)
        )

    def canonical(self):
        """Canonical text form, e.g. `{N=2, list[1]=tom}`."""
        if self._key is None:
            body = ", ".join(
                f"{loc}={format_value(value)}" for loc, value in self.items()
            )
            self._key = "{" + body + "}"
        return self._key

    def to_json(self):
        """JSON object mapping `"x"` / `"list[2]"` to numbers or strings."""
        return {str(loc): value_to_json(value) for loc, value in self.items()}

    def __eq__(self, other):
        if not isinstance(other, Store):
            return NotImplemented
        return self._bindings == other._bindings

    def __hash__(self):
        return hash(self.canonical())

    def __str__(self):
        return self.canonical()

    def __repr__(self):
        return f"Store({self.canonical()})"


EMPTY_STORE = Store()
