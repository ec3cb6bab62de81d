import datetime
import importlib
import logging
import os
import sys
import traceback
from typing import Any, Callable

import click
import humanize

from leafspan.config import get_settings

log = logging.getLogger(__name__)

COMMANDS_DIR = os.path.join(os.path.dirname(__file__), "commands")


def _print_traceback(error: Exception) -> int:
    traceback.print_exception(type(error), error, error.__traceback__, file=sys.stderr)
    return 1


class LeafSpanCLI(click.Group):
    """The command group; sub-commands are discovered in ``leafspan/commands``."""

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        self.__started = datetime.datetime.now()
        self.error_handler: Callable[[Exception], int] = _print_traceback
        super().__init__(*args, **kwargs)

    @property
    def started(self) -> datetime.datetime:
        return self.__started

    def get_uptime(self) -> str:
        return humanize.precisedelta(datetime.datetime.now() - self.started)

    def load_commands(self) -> None:
        for filename in sorted(os.listdir(COMMANDS_DIR)):
            if filename.endswith(".py") and not filename.startswith("_"):
                module = importlib.import_module(f"leafspan.commands.{filename[:-3]}")
                module.setup(self)
                log.debug("%s was loaded", filename[:-3])

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except (click.exceptions.Exit, click.ClickException, click.Abort):
            raise
        except Exception as error:
            ctx.exit(self.error_handler(error))


def _configure_logging(ctx: click.Context, param: click.Parameter, value: str) -> str:
    level = value.upper()
    if not isinstance(logging.getLevelName(level), int):
        raise click.BadParameter(f"unknown log level {value!r}")
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )
    return level


def build_cli() -> LeafSpanCLI:
    @click.group(cls=LeafSpanCLI)
    @click.option(
        "--log-level",
        default=lambda: get_settings().log_level,
        callback=_configure_logging,
        is_eager=True,
        expose_value=False,
        help="Logging level for diagnostics on stderr.",
    )
    def cli() -> None:
        """Spanning trees with many leaves, with a certificate for the bound."""

    cli.load_commands()
    return cli
