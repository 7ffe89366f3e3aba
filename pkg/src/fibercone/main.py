"""Command-line entry point.

Usage:
    fibercone sessions/example_6_2.fc series I
    fibercone sessions/example_6_5.fc report I J --nmax 30
    fibercone paper-examples --only 6.3
"""

from __future__ import annotations

import argparse
import logging
import logging.config
import sys
from pathlib import Path

from pydantic import ValidationError

from fibercone.cli.commands import COMMANDS, run_command
from fibercone.cli.paper_examples import run_examples
from fibercone.cli.report import Report
from fibercone.cli.session import Workspace, parse_session
from fibercone.config import settings
from fibercone.errors import BadParametersError, FiberConeError

logger = logging.getLogger(__name__)

PAPER_EXAMPLES = "paper-examples"


def configure_logging(level: str) -> None:
    """Send every log record to stderr; stdout carries only the report."""
    logging.config.dictConfig(
        {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": {
                "default": {
                    "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
                    "datefmt": "%Y-%m-%d %H:%M:%S",
                },
            },
            "handlers": {
                "default": {
                    "formatter": "default",
                    "class": "logging.StreamHandler",
                    "stream": "ext://sys.stderr",
                },
            },
            "root": {"handlers": ["default"], "level": level.upper()},
        }
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibercone",
        description="Exact invariants of fiber cones of m-primary ideals.",
    )
    parser.add_argument("target", help=f"session file, or '{PAPER_EXAMPLES}'")
    parser.add_argument("command", nargs="?", help=f"one of: {', '.join(COMMANDS)}")
    parser.add_argument("args", nargs="*", help="ideal names and integers for the command")
    parser.add_argument("--only", help="run a single example id (or id prefix)")
    parser.add_argument("--nmax", type=int, dest="n_max", help="stabilization budget")
    parser.add_argument("--window", type=int, help="stabilization window")
    parser.add_argument("--trunc", type=int, dest="truncation", help="local ring truncation N")
    parser.add_argument("--format", choices=["plain"], default="plain", help="output format")
    parser.add_argument(
        "--variant", choices=["m", "I"], default="m", help="superficial limit variant"
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="log level for stderr diagnostics",
    )
    return parser


def execute(options: argparse.Namespace) -> Report:
    """Run the parsed command line and return its report.

    Raises:
        FiberConeError: On input, computation or consistency failures
    """
    overrides = {
        key: value
        for key in ("n_max", "window", "truncation")
        if (value := getattr(options, key)) is not None
    }
    if options.target == PAPER_EXAMPLES:
        if options.command is not None:
            raise BadParametersError(f"{PAPER_EXAMPLES} takes no command", command=options.command)
        return run_examples(options.only, overrides)

    if options.command is None:
        raise BadParametersError("A command is required", known=", ".join(COMMANDS))
    path = Path(options.target)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise BadParametersError(
            "Cannot read session file", original_error=exc, path=str(path)
        ) from exc
    workspace = Workspace.open(parse_session(text), overrides)
    return run_command(workspace, options.command, options.args, variant=options.variant)


def run(argv: list[str] | None = None) -> int:
    """Parse arguments, print the report to stdout and return the exit code."""
    options = build_parser().parse_args(argv)
    configure_logging(options.log_level or settings.log_level)

    try:
        report = execute(options)
    except FiberConeError as exc:
        logger.debug("Command failed", extra={"error": exc.to_dict()})
        report = Report.from_error(exc)
    except ValidationError as exc:
        report = Report.from_error(BadParametersError("Invalid parameters", original_error=exc))

    sys.stdout.write(report.render())
    return report.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
