"""
app.schemas.trace_schema
------------------------

Serialization of trace events. One JSON object per event with the keys
`step, thread, rule, mode, stmt, delta`; `delta` is null except for
assignments, where it maps the location to the value written.
"""

from marshmallow import Schema, fields


class TraceEventSchema(Schema):
    """
    Marshmallow schema for TraceEvent (dump only).

    Attributes:
        step (fields.Integer): Position in the trace.
        thread (fields.Integer): Thread id.
        rule (fields.Function): Rule tag, e.g. `R6` or `TrueElim`.
        mode (fields.Function): `C` or `S`.
        stmt (fields.String): Rendered statement.
        delta (fields.Method): `{"x": 1}` for assignments, else null.
    """
    step = fields.Integer()
    thread = fields.Integer(attribute="thread_id")
    rule = fields.Function(lambda event: event.rule.value)
    mode = fields.Function(lambda event: event.mode.value)
    stmt = fields.String(attribute="statement")
    delta = fields.Method("get_delta", allow_none=True)

    class Meta:
        ordered = True

    def get_delta(self, event):
        return event.delta_json()
