"""
app.schemas.outcome_schema
--------------------------

Serialization of a RunOutcome: status, final store, schedule, error and,
unless excluded, the trace.
"""

from marshmallow import Schema, fields

from app.schemas.trace_schema import TraceEventSchema


class RunOutcomeSchema(Schema):
    """Marshmallow schema for RunOutcome (dump only)."""
    status = fields.Function(lambda outcome: outcome.status.value)
    store = fields.Function(lambda outcome: outcome.final_store.to_json())
    schedule = fields.List(fields.Integer())
    error = fields.Function(
        lambda outcome: outcome.error.to_dict() if outcome.error else None
    )
    trace = fields.List(fields.Nested(TraceEventSchema))

    class Meta:
        ordered = True
