"""
app.cli
-------

Command-line front end `cpar`.

Commands:
    - cpar run FILE: execute once under a schedule policy.
    - cpar explore FILE: enumerate every schedule, optionally asserting a
      store predicate on each terminal store.
    - cpar check FILE: enumerate every schedule and check atomicity of the
      sequential runs in each trace.

Reports go to standard output, diagnostics to standard error. Exit codes:
0 success, 1 failure or violated assertion, 2 step limit, 3 usage or parse
error.
"""

import json
import sys
from pathlib import Path

import click

from app.config import engine_defaults
from app.engine import run, RunStatus
from app.errors import CparError, CparSyntaxError, ScriptError
from app.explorer import explore, check_program, parse_predicate
from app.logger import logger
from app.schemas import (
    RunOutcomeSchema, TraceEventSchema, ExplorationResultSchema,
    AtomicityReportSchema
)
from app.syntax import parse_program
from app.utils import (
    make_engine_config, make_bounds, make_policy, parse_script,
    assertion_verdict
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_STEP_LIMIT = 2
EXIT_USAGE = 3

_STATUS_EXIT = {
    RunStatus.SUCCESS: EXIT_OK,
    RunStatus.FAILURE: EXIT_FAILURE,
    RunStatus.STEP_LIMIT: EXIT_STEP_LIMIT,
}

_DEFAULTS = engine_defaults()


class CparGroup(click.Group):
    """Click group whose usage errors exit with status 3."""

    def main(self, args=None, prog_name=None, complete_var=None,
             standalone_mode=True, **extra):
        try:
            code = super().main(args=args, prog_name=prog_name,
                                complete_var=complete_var,
                                standalone_mode=False, **extra)
        except click.ClickException as err:
            err.show()
            code = EXIT_USAGE
        except click.exceptions.Abort:
            click.echo("Aborted!", err=True)
            code = EXIT_USAGE
        code = code or EXIT_OK
        if not standalone_mode:
            return code
        sys.exit(code)


def _load(ctx, file, variables=()):
    """Read and parse a source file; exit 3 on any error."""
    try:
        text = Path(file).read_text(encoding="utf-8")
        return parse_program(text, variables)
    except CparSyntaxError as err:
        click.echo(f"{file}:{err}", err=True)
    except (OSError, UnicodeDecodeError) as err:
        click.echo(f"cannot read {file}: {err}", err=True)
    ctx.exit(EXIT_USAGE)
    return None


def _usage(ctx, message):
    click.echo(f"error: {message}", err=True)
    ctx.exit(EXIT_USAGE)


def _emit_json(payload):
    click.echo(json.dumps(payload, indent=2))


def _ids(thread_ids):
    return ",".join(str(tid) for tid in thread_ids)


def granularity_option(func):
    return click.option(
        "--granularity", type=click.Choice(["literal", "fine"]),
        default=_DEFAULTS["CPAR_GRANULARITY"], show_default=True,
        help="Scheduling granularity of `;` and `repeat`."
    )(func)


def max_steps_option(func):
    return click.option(
        "--max-steps", type=click.IntRange(min=1), envvar="CPAR_MAX_STEPS",
        default=_DEFAULTS["CPAR_MAX_STEPS"], show_default=True,
        help="Scheduling units per run (env CPAR_MAX_STEPS)."
    )(func)


def init_option(func):
    return click.option(
        "--init", default="", metavar="BINDINGS",
        help="Initial store, e.g. \"N=0, list[1]=tom\"."
    )(func)


@click.group(cls=CparGroup)
def cli():
    """Interpreter and schedule explorer for C∥ programs."""


@cli.command("run")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--policy",
              type=click.Choice(["round-robin", "random", "script"]),
              default="round-robin", show_default=True)
@click.option("--seed", type=click.IntRange(0, (1 << 64) - 1), default=0,
              show_default=True, help="Seed of the random policy.")
@click.option("--script", "script_text", default="", metavar="IDS",
              help="Comma-separated thread ids for the script policy.")
@granularity_option
@max_steps_option
@click.option("--trace", "trace_format",
              type=click.Choice(["text", "json", "off"]), default="off",
              show_default=True)
@init_option
@click.option("--json", "as_json", is_flag=True,
              help="Print the outcome as JSON.")
@click.pass_context
def cmd_run(ctx, file, policy, seed, script_text, granularity, max_steps,
            trace_format, init, as_json):
    """Run FILE once and print the final store."""
    try:
        script = parse_script(script_text)
        if policy == "script" and not script:
            raise ValueError("--policy script needs --script")
        config = make_engine_config(
            granularity, max_steps, make_policy(policy, seed, script), init
        )
    except (CparError, ValueError) as err:
        _usage(ctx, str(err))
    program = _load(ctx, file, config.initial_store.variable_names())
    try:
        outcome = run(config, program)
    except ScriptError as err:
        _usage(ctx, f"schedule script: {err}")

    if as_json:
        exclude = ("trace",) if trace_format == "off" else ()
        _emit_json(RunOutcomeSchema(exclude=exclude).dump(outcome))
    else:
        click.echo(f"status: {outcome.status.value}")
        click.echo(f"store: {outcome.final_store.canonical()}")
        click.echo(f"schedule: {_ids(outcome.schedule)}")
        if outcome.error is not None:
            click.echo(f"error: {outcome.error}")
        if trace_format == "text":
            for event in outcome.trace:
                click.echo(event.to_text())
        elif trace_format == "json":
            _emit_json(TraceEventSchema(many=True).dump(outcome.trace))
    ctx.exit(_STATUS_EXIT[outcome.status])


def _explore_setup(ctx, file, granularity, max_steps, max_schedules,
                   max_states, init):
    try:
        config = make_engine_config(granularity, max_steps, init=init)
        bounds = make_bounds(max_steps, max_schedules, max_states)
    except (CparError, ValueError) as err:
        _usage(ctx, str(err))
    program = _load(ctx, file, config.initial_store.variable_names())
    return program, config, bounds


def bounds_options(func):
    func = click.option(
        "--max-states", type=click.IntRange(min=1),
        default=_DEFAULTS["CPAR_MAX_STATES"], show_default=True
    )(func)
    return click.option(
        "--max-schedules", type=click.IntRange(min=1),
        default=_DEFAULTS["CPAR_MAX_SCHEDULES"], show_default=True
    )(func)


@cli.command("explore")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@granularity_option
@max_steps_option
@bounds_options
@init_option
@click.option("--assert", "assertion", default="", metavar="PREDICATE",
              help="Clauses every terminal store must satisfy, e.g. "
                   "\"N=2, defined(list[1])\", or @FILE to read them "
                   "from a file.")
@click.option("--json", "as_json", is_flag=True,
              help="Print the result as JSON.")
@click.pass_context
def cmd_explore(ctx, file, granularity, max_steps, max_schedules, max_states,
                init, assertion, as_json):
    """Enumerate every schedule of FILE."""
    try:
        if assertion.startswith("@"):
            assertion = Path(assertion[1:]).read_text(encoding="utf-8")
        predicate = parse_predicate(assertion)
    except (OSError, CparError) as err:
        _usage(ctx, f"--assert: {err}")
    program, config, bounds = _explore_setup(
        ctx, file, granularity, max_steps, max_schedules, max_states, init
    )
    result = explore(config, program, bounds)
    verdict = assertion_verdict(predicate, result.terminal_stores)
    violating = verdict["violations"]

    if as_json:
        payload = ExplorationResultSchema().dump(result)
        if predicate.clauses:
            payload["assertion"] = verdict
        _emit_json(payload)
    else:
        click.echo(
            f"schedules: {result.schedules_explored}  "
            f"states: {result.states_visited}  "
            f"truncated: {'yes' if result.truncated else 'no'}"
        )
        click.echo(f"stores: {len(result.terminal_stores)}")
        for index, entry in enumerate(result.terminal_stores, 1):
            click.echo(
                f"  [{index}] {entry.store.canonical()}  count={entry.count}  "
                f"witness={_ids(entry.witness)}"
            )
        click.echo(f"failures: {len(result.failures)}")
        for record in result.failures:
            click.echo(
                f"  {record.key}  count={record.count}  "
                f"witness={_ids(record.witness)}"
            )
        if predicate.clauses:
            state = "holds" if verdict["holds"] else "VIOLATED"
            click.echo(f"assertion: {predicate} -> {state}")
            for entry in result.terminal_stores:
                failed = predicate.violations(entry.store)
                if failed:
                    click.echo(
                        f"  {entry.store.canonical()} fails "
                        f"[{', '.join(str(c) for c in failed)}]  "
                        f"witness={_ids(entry.witness)}"
                    )
    if violating:
        logger.warning("Assertion violated.", predicate=str(predicate),
                       stores=len(violating))
        ctx.exit(EXIT_FAILURE)
    ctx.exit(EXIT_OK)


@cli.command("check")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@granularity_option
@max_steps_option
@bounds_options
@init_option
@click.option("--json", "as_json", is_flag=True,
              help="Print the report as JSON.")
@click.pass_context
def cmd_check(ctx, file, granularity, max_steps, max_schedules, max_states,
              init, as_json):
    """Check atomicity of sequential runs over every schedule of FILE."""
    program, config, bounds = _explore_setup(
        ctx, file, granularity, max_steps, max_schedules, max_states, init
    )
    report = check_program(config, program, bounds)
    if as_json:
        _emit_json(AtomicityReportSchema().dump(report))
    else:
        click.echo(
            f"atomic: {'yes' if report.atomic else 'no'}  "
            f"schedules: {report.schedules}  "
            f"truncated: {'yes' if report.truncated else 'no'}"
        )
        for script in report.violations:
            click.echo(f"  violation witness={_ids(script)}")
    ctx.exit(EXIT_OK if report.atomic else EXIT_FAILURE)


def main(argv=None):
    """Console entry point; returns the exit status."""
    return cli.main(args=argv, prog_name="cpar", standalone_mode=False)
