"""
app.resources.run
-----------------

POST /run: execute a program once under a schedule policy.
"""

from flask import request, g, current_app
from flask_restful import Resource

from app.engine import run
from app.logger import logger
from app.schemas.outcome_schema import RunOutcomeSchema
from app.schemas.request_schema import RunRequestSchema
from app.syntax import parse_program
from app.utils import json_body_required, make_engine_config, make_policy


class RunResource(Resource):
    """Run a program and report its outcome."""

    @json_body_required(RunRequestSchema)
    def post(self, body):
        """
        Run the `source` field.

        Returns:
            tuple: The RunOutcome JSON (trace included when `trace` is true)
            and status 200; 400 on parse, init or script errors.
        """
        logger.info(
            "Running program.",
            path=request.path,
            method=request.method,
            policy=body["policy"],
            request_id=getattr(g, "request_id", None)
        )
        config = make_engine_config(
            granularity=body["granularity"],
            max_steps=body["max_steps"],
            policy=make_policy(body["policy"], body["seed"], body["script"]),
            init=body["init"],
            defaults=current_app.config,
        )
        program = parse_program(body["source"],
                                config.initial_store.variable_names())
        outcome = run(config, program)
        exclude = () if body["trace"] else ("trace",)
        return RunOutcomeSchema(exclude=exclude).dump(outcome), 200
