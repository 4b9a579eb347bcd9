"""
app.schemas
-----------

Marshmallow schemas for the JSON interfaces: traces, run outcomes,
exploration results and the HTTP request bodies.
"""

from .trace_schema import TraceEventSchema
from .outcome_schema import RunOutcomeSchema
from .exploration_schema import ExplorationResultSchema, AtomicityReportSchema
from .request_schema import (
    ParseRequestSchema, RunRequestSchema, ExploreRequestSchema,
    CheckRequestSchema
)
