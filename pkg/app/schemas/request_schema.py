"""
app.schemas.request_schema
--------------------------

Validation of HTTP request bodies for /parse, /run, /explore and /check.
Loaded data is a plain dict; unknown keys are rejected.
"""

from marshmallow import (
    Schema, fields, validate, validates_schema, ValidationError
)

GRANULARITIES = ("literal", "fine")
POLICIES = ("round-robin", "random", "script")


class ParseRequestSchema(Schema):
    """Body of POST /parse."""
    source = fields.String(required=True)
    init = fields.String(load_default="")


class RunRequestSchema(Schema):
    """Body of POST /run."""
    source = fields.String(required=True)
    policy = fields.String(
        load_default="round-robin", validate=validate.OneOf(POLICIES)
    )
    seed = fields.Integer(
        load_default=0, validate=validate.Range(min=0, max=(1 << 64) - 1)
    )
    script = fields.List(fields.Integer(validate=validate.Range(min=0)),
                         load_default=list)
    granularity = fields.String(
        load_default=None, validate=validate.OneOf(GRANULARITIES)
    )
    max_steps = fields.Integer(load_default=None,
                               validate=validate.Range(min=1))
    init = fields.String(load_default="")
    trace = fields.Boolean(load_default=False)

    @validates_schema
    def check_script(self, data, **kwargs):
        """A script policy needs a script."""
        _ = kwargs
        if data.get("policy") == "script" and not data.get("script"):
            raise ValidationError("script policy requires a script.", "script")


class CheckRequestSchema(Schema):
    """Body of POST /check."""
    source = fields.String(required=True)
    granularity = fields.String(
        load_default=None, validate=validate.OneOf(GRANULARITIES)
    )
    max_steps = fields.Integer(load_default=None,
                               validate=validate.Range(min=1))
    max_schedules = fields.Integer(load_default=None,
                                   validate=validate.Range(min=1))
    max_states = fields.Integer(load_default=None,
                                validate=validate.Range(min=1))
    init = fields.String(load_default="")


class ExploreRequestSchema(CheckRequestSchema):
    """Body of POST /explore: the check body plus an optional assertion."""
    assertion = fields.String(data_key="assert", load_default="")
