"""Command-line front end: session files, commands and the built-in example suite."""

from fibercone.cli.commands import COMMANDS, run_command
from fibercone.cli.paper_examples import build_examples, run_examples
from fibercone.cli.report import Report, format_value
from fibercone.cli.session import Session, Workspace, parse_session

__all__ = [
    "COMMANDS",
    "Report",
    "Session",
    "Workspace",
    "build_examples",
    "format_value",
    "parse_session",
    "run_command",
    "run_examples",
]
