from logging_config import setup_logging

# Initialize logging BEFORE anything else
setup_logging()

import sys
from typing import Optional, Sequence

import click
import typer

from commands import corpus_commands, ring_commands
from constants import ExitCodes
from logging_config import get_logger

logger = get_logger("app")

app = typer.Typer(
    name="fsing",
    help="F-singularity classification of graded rings F_p[x]/J.",
    no_args_is_help=True,
    add_completion=False,
)

# REGISTER COMMANDS
app.add_typer(ring_commands.app)
app.add_typer(corpus_commands.app)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point with the exit code contract: usage errors exit 1, not click's 2."""
    try:
        code = app(args=list(argv) if argv is not None else None, standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return ExitCodes.USAGE
    except click.Abort:
        return ExitCodes.USAGE
    return code if isinstance(code, int) else ExitCodes.OK


if __name__ == "__main__":
    sys.exit(run())
