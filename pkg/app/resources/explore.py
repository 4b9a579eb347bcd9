"""
app.resources.explore
---------------------

POST /explore and POST /check: exhaustive schedule exploration, with an
optional store assertion, and atomicity checking over every explored trace.
"""

from flask import request, g, current_app
from flask_restful import Resource

from app.explorer import explore, check_program, parse_predicate
from app.logger import logger
from app.schemas.exploration_schema import (
    ExplorationResultSchema, AtomicityReportSchema
)
from app.schemas.request_schema import (
    ExploreRequestSchema, CheckRequestSchema
)
from app.syntax import parse_program
from app.utils import (
    json_body_required, make_engine_config, make_bounds, assertion_verdict
)


def _prepare(body):
    defaults = current_app.config
    config = make_engine_config(
        granularity=body["granularity"],
        max_steps=body["max_steps"],
        init=body["init"],
        defaults=defaults,
    )
    program = parse_program(body["source"],
                            config.initial_store.variable_names())
    bounds = make_bounds(body["max_steps"], body["max_schedules"],
                         body["max_states"], defaults=defaults)
    return program, config, bounds


class ExploreResource(Resource):
    """Enumerate every schedule of a program."""

    @json_body_required(ExploreRequestSchema)
    def post(self, body):
        """
        Explore the `source` field.

        Returns:
            tuple: ExplorationResult JSON plus an `assertion` verdict when
            `assert` is given, and status 200.
        """
        logger.info(
            "Exploring program.",
            path=request.path,
            method=request.method,
            request_id=getattr(g, "request_id", None)
        )
        predicate = parse_predicate(body["assertion"])
        program, config, bounds = _prepare(body)
        result = explore(config, program, bounds)
        payload = ExplorationResultSchema().dump(result)
        if predicate.clauses:
            payload["assertion"] = assertion_verdict(
                predicate, result.terminal_stores
            )
        return payload, 200


class CheckResource(Resource):
    """Check atomicity of sequential runs over every schedule."""

    @json_body_required(CheckRequestSchema)
    def post(self, body):
        """
        Check the `source` field.

        Returns:
            tuple: `{"atomic", "schedules", "truncated", "violations"}` and
            status 200.
        """
        logger.info(
            "Checking atomicity.",
            path=request.path,
            method=request.method,
            request_id=getattr(g, "request_id", None)
        )
        program, config, bounds = _prepare(body)
        report = check_program(config, program, bounds)
        return AtomicityReportSchema().dump(report), 200
