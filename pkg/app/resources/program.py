"""
app.resources.program
---------------------

POST /parse: parse a program and return its canonical rendering.
"""

from flask import request, g
from flask_restful import Resource

from app.explorer import parse_bindings
from app.logger import logger
from app.schemas.request_schema import ParseRequestSchema
from app.syntax import parse_program, render
from app.utils import json_body_required


class ParseResource(Resource):
    """Parse C∥ source text."""

    @json_body_required(ParseRequestSchema)
    def post(self, body):
        """
        Parse the `source` field. Variables bound by `init` are never read
        as symbols.

        Returns:
            tuple: Canonical text, definition summary and thread count with
            status 200, or the parse error with status 400.
        """
        logger.info(
            "Parsing program.",
            path=request.path,
            method=request.method,
            request_id=getattr(g, "request_id", None)
        )
        bound = parse_bindings(body["init"]).variable_names()
        program = parse_program(body["source"], bound)
        return {
            "canonical": render(program),
            "definitions": [
                {"name": d.name, "params": list(d.params), "body": render(d.body)}
                for d in program.definitions
            ],
            "threads": len(program.main),
        }, 200
