"""
__init__.py
-----------

Application factory of the C∥ HTTP service.

The service exposes the toolchain operations (parse, run, explore, check)
over JSON. Every error answers with the same body shape:
`{"message", "path", "method", "request_id"}`.

Functions:
    - register_error_handlers(app): JSON handlers for HTTP and toolchain errors.
    - create_app(config_class): Build and configure the Flask app.
"""

import os
import uuid

from flask import Flask, request, g, abort
from flask_cors import CORS
from werkzeug.exceptions import InternalServerError

from app.errors import CparError, ScriptError
from app.logger import logger
from app.routes import register_routes

# status -> (message, log message)
HTTP_ERRORS = {
    400: ("Bad request", "Bad request received."),
    404: ("Resource not found", "Resource not found."),
    405: ("Method not allowed", "Method not allowed."),
}


def register_test_routes(app):
    """
    Register test-only routes that trigger error handlers directly.

    Args:
        app (Flask): The Flask application instance.
    """
    @app.route('/bad')
    def trigger_bad():
        abort(400)

    @app.route('/fail')
    def trigger_fail():
        raise InternalServerError("Test internal error")

    @app.route('/script-error')
    def trigger_script_error():
        raise ScriptError("script ran out with threads 0 still runnable")


def _error_body(message):
    return {
        "message": message,
        "path": request.path,
        "method": request.method,
        "request_id": getattr(g, "request_id", None)
    }


def _http_handler(status, message, log_message):
    def handler(_):
        logger.warning(
            log_message,
            status=status,
            path=request.path,
            method=request.method,
            request_id=getattr(g, "request_id", None)
        )
        return _error_body(message), status
    handler.__name__ = f"handle_{status}"
    return handler


def register_error_handlers(app):
    """
    Register JSON error handlers on the Flask application.

    HTTP errors listed in HTTP_ERRORS answer with their fixed message. A
    toolchain error that escapes a resource answers 400 with its details;
    anything else is a 500.

    Args:
        app (Flask): The Flask application instance.
    """
    for status, (message, log_message) in HTTP_ERRORS.items():
        app.register_error_handler(
            status, _http_handler(status, message, log_message)
        )

    @app.errorhandler(CparError)
    def toolchain_error(err):
        logger.warning(
            "Toolchain error.",
            error=str(err),
            path=request.path,
            request_id=getattr(g, "request_id", None)
        )
        response = _error_body(str(err))
        response["error"] = err.to_dict()
        return response, 400

    @app.errorhandler(500)
    def internal_error(e):
        logger.error(
            "Internal server error",
            exc_info=True,
            path=request.path,
            method=request.method,
            request_id=getattr(g, "request_id", None)
        )
        response = _error_body("Internal server error")
        if app.config.get("DEBUG"):
            response["exception"] = str(e)
        return response, 500

    logger.info("Error handlers registered successfully.")


def create_app(config_class):
    """
    Factory to create and configure the Flask application.

    Args:
        config_class: The configuration class or import path to use for Flask.

    Returns:
        Flask: The configured and ready-to-use Flask application instance.
    """
    env = os.getenv('FLASK_ENV')
    logger.info("Creating app.", env=env)
    app = Flask(__name__)
    app.config.from_object(config_class)
    if env in ('development', 'staging'):
        CORS(
            app,
            supports_credentials=True,
            resources={r"/*": {"origins": "*"}}
            )

    @app.before_request
    def assign_request_id():
        g.request_id = request.headers.get('X-Request-Id') or uuid.uuid4().hex

    register_error_handlers(app)
    register_routes(app)
    if app.config.get('TESTING'):
        register_test_routes(app)

    logger.info("App created successfully.",
                max_steps=app.config.get("CPAR_MAX_STEPS"),
                granularity=app.config.get("CPAR_GRANULARITY"))
    return app
