"""
cpar.py
-------

Entry point of the `cpar` command line.

Loads the .env file of the current environment (CPAR_ENV, default
development) so that CPAR_* defaults apply, then hands over to the click
group in app.cli. Invalid CPAR_* values are reported as usage errors.

Usage:
    python cpar.py run examples.cpar --policy random --seed 7
    python cpar.py explore signup.cpar --init "N=0" --assert "N=2"
"""

import os
import sys

import click
from dotenv import load_dotenv

ENV_FILES = {
    'production': '.env.production',
    'staging': '.env.staging',
    'testing': '.env.test',
}
EXIT_USAGE = 3

env = os.environ.get('CPAR_ENV', 'development')
load_dotenv(ENV_FILES.get(env, '.env.development'))


def entry(argv=None):
    """
    Run the command line and return its exit code.

    The configuration is read while app.cli is imported, so a bad CPAR_*
    variable surfaces here rather than inside click.
    """
    try:
        # pylint: disable=import-outside-toplevel
        from app.cli import main
    except ValueError as err:
        click.echo(f"error: configuration: {err}", err=True)
        return EXIT_USAGE
    return main(argv)


if __name__ == '__main__':
    sys.exit(entry(sys.argv[1:]))
