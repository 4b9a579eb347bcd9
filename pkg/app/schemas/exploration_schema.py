"""
app.schemas.exploration_schema
------------------------------

Serialization of exploration results:

    {"schedules": n, "truncated": bool, "states": n,
     "stores": [{"store": {...}, "witness": [ids...], "count": m}],
     "failures": [{"error": {...}, "witness": [ids...], "count": m}]}
"""

from marshmallow import Schema, fields


class TerminalStoreSchema(Schema):
    """One distinct terminal store."""
    store = fields.Function(lambda entry: entry.store.to_json())
    witness = fields.List(fields.Integer())
    count = fields.Integer()

    class Meta:
        ordered = True


class FailureRecordSchema(Schema):
    """One distinct failure."""
    error = fields.Function(lambda record: record.error.to_dict())
    witness = fields.List(fields.Integer())
    count = fields.Integer()

    class Meta:
        ordered = True


class ExplorationResultSchema(Schema):
    """Marshmallow schema for ExplorationResult (dump only)."""
    schedules = fields.Integer(attribute="schedules_explored")
    truncated = fields.Boolean()
    states = fields.Integer(attribute="states_visited")
    stores = fields.List(
        fields.Nested(TerminalStoreSchema), attribute="terminal_stores"
    )
    failures = fields.List(fields.Nested(FailureRecordSchema))

    class Meta:
        ordered = True


class AtomicityReportSchema(Schema):
    """Result of checking atomicity over every explored trace."""
    atomic = fields.Boolean()
    schedules = fields.Integer()
    truncated = fields.Boolean()
    violations = fields.List(fields.List(fields.Integer()))

    class Meta:
        ordered = True
