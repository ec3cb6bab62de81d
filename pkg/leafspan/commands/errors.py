import logging
import sys
import traceback

import click

from leafspan.exceptions import (
    DisconnectedGraph,
    GraphFormatError,
    InputError,
    InvariantBreach,
    OracleTooLarge,
)

log = logging.getLogger(__name__)

USAGE_ERROR = 2
CHECK_FAILED = 1


def _line(message: str) -> None:
    click.echo(f"error: {message}", err=True)


def handle_error(error: Exception) -> int:
    """Reports ``error`` on stderr and returns the process exit code."""
    error = getattr(error, "original", error)

    if isinstance(error, GraphFormatError):
        _line(f"bad input file: {error}")
        return USAGE_ERROR

    elif isinstance(error, DisconnectedGraph):
        _line(f"graph must be connected with at least two vertices: {error}")
        return USAGE_ERROR

    elif isinstance(error, OracleTooLarge):
        _line(f"oracle gave up: {error}")
        return USAGE_ERROR

    elif isinstance(error, InputError):
        _line(str(error))
        return USAGE_ERROR

    elif isinstance(error, InvariantBreach):
        _line(f"{type(error).__name__}: {error}")
        log.debug("invariant breach", exc_info=error)
        return CHECK_FAILED

    print("Unhandled exception in leafspan:", file=sys.stderr)
    traceback.print_exception(type(error), error, error.__traceback__, file=sys.stderr)
    return CHECK_FAILED


def setup(cli) -> None:
    cli.error_handler = handle_error
