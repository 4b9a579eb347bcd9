"""
app.utils
---------

Helpers shared by the CLI and the HTTP resources: building engine and
explorer configuration from user-facing options, and the decorator that
validates request bodies and turns toolchain errors into 400 responses.
"""

from functools import wraps

from flask import request, g
from marshmallow import ValidationError

from app.config import engine_defaults
from app.engine.policies import (
    EngineConfig, Granularity, RoundRobin, Random, Script
)
from app.errors import CparError
from app.explorer.predicate import parse_bindings
from app.explorer.search import ExploreBounds
from app.logger import logger


def make_policy(name, seed=0, script=()):
    """
    Build a schedule policy from its CLI/HTTP name.

    Args:
        name (str): `round-robin`, `random` or `script`.
        seed (int): Seed of the random policy.
        script (Sequence[int]): Thread ids of the script policy.
    """
    if name == "random":
        return Random(seed)
    if name == "script":
        return Script(tuple(script))
    if name == "round-robin":
        return RoundRobin()
    raise ValueError(f"unknown policy {name!r}")


def make_engine_config(granularity=None, max_steps=None, policy=None,
                       init="", defaults=None):
    """
    Build an EngineConfig, falling back to the configured defaults.

    Raises:
        PredicateSyntaxError: `init` is not a `loc=value` list.
    """
    defaults = defaults or engine_defaults()
    return EngineConfig(
        granularity=Granularity(granularity or defaults["CPAR_GRANULARITY"]),
        max_steps=max_steps or defaults["CPAR_MAX_STEPS"],
        policy=policy or RoundRobin(),
        initial_store=parse_bindings(init or ""),
    )


def make_bounds(max_steps=None, max_schedules=None, max_states=None,
                defaults=None):
    """Build ExploreBounds, falling back to the configured defaults."""
    defaults = defaults or engine_defaults()
    return ExploreBounds(
        max_steps_per_run=max_steps or defaults["CPAR_MAX_STEPS"],
        max_schedules=max_schedules or defaults["CPAR_MAX_SCHEDULES"],
        max_states=max_states or defaults["CPAR_MAX_STATES"],
    )


def parse_script(text):
    """Parse `0,1,0,1` into a tuple of thread ids."""
    text = (text or "").strip()
    if not text:
        return ()
    try:
        ids = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(
            f"script must be comma-separated thread ids, got {text!r}"
        ) from None
    if any(tid < 0 for tid in ids):
        raise ValueError("thread ids in a script are non-negative")
    return ids


def json_body_required(schema_class):
    """
    Decorator validating the JSON body of a resource method.

    The loaded body is passed as the `body` keyword argument. Validation
    errors answer 400 with `{"errors": ...}`; toolchain errors (parse,
    predicate, script) answer 400 with `{"message": ..., "error": ...}`.

    Usage:
        @json_body_required(RunRequestSchema)
        def post(self, body):
            ...
    """
    def decorator(view_func):
        @wraps(view_func)
        def wrapped(*args, **kwargs):
            try:
                body = schema_class().load(request.get_json(silent=True) or {})
            except ValidationError as err:
                logger.warning(
                    "Validation error.",
                    errors=err.messages,
                    path=request.path,
                    request_id=getattr(g, "request_id", None)
                )
                return {"errors": err.messages}, 400
            try:
                return view_func(*args, body=body, **kwargs)
            except (CparError, ValueError) as err:
                logger.warning(
                    "Rejected request.",
                    error=str(err),
                    path=request.path,
                    request_id=getattr(g, "request_id", None)
                )
                detail = (err.to_dict() if isinstance(err, CparError)
                          else {"kind": "ValueError", "message": str(err)})
                return {"message": str(err), "error": detail}, 400
        return wrapped
    return decorator


def assertion_verdict(predicate, terminal_stores):
    """
    Evaluate a predicate against explored terminal stores.

    Returns:
        dict: `predicate`, `holds` and the `violations` list, one entry per
        failing store with its witness and the clauses it breaks.
    """
    violations = [
        {
            "store": entry.store.to_json(),
            "witness": list(entry.witness),
            "violated": [str(c) for c in predicate.violations(entry.store)],
        }
        for entry in terminal_stores
        if not predicate.holds(entry.store)
    ]
    return {
        "predicate": str(predicate),
        "holds": not violations,
        "violations": violations,
    }
