"""Flat ``path.key = value`` reports printed by the command line."""

from __future__ import annotations

from enum import Enum
from typing import Any

from pydantic import BaseModel, Field

from fibercone.errors import FiberConeError


def format_value(value: Any) -> str:
    """true/false for booleans, space-separated lists, none for None."""
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, list | tuple):
        return " ".join(format_value(v) for v in value)
    return str(value)


class Report(BaseModel):
    """Ordered report lines and the process exit code (0 ok, 1 assertion failure, 2 input error)."""

    lines: list[tuple[str, str]] = Field(default_factory=list)
    exit_code: int = Field(default=0, ge=0, le=2)

    def add(self, key: str, value: Any) -> None:
        self.lines.append((key, format_value(value)))

    def extend(self, prefix: str, values: dict[str, Any]) -> None:
        for key, value in values.items():
            self.add(f"{prefix}.{key}", value)

    def merge(self, other: Report) -> None:
        self.lines.extend(other.lines)
        self.exit_code = max(self.exit_code, other.exit_code)

    def get(self, key: str) -> str:
        """Value of the first line with this key.

        Raises:
            KeyError: If no line has the key
        """
        for k, v in self.lines:
            if k == key:
                return v
        raise KeyError(key)

    def render(self) -> str:
        return "".join(f"{key} = {value}\n" for key, value in self.lines)

    @classmethod
    def from_error(cls, error: FiberConeError) -> Report:
        report = cls(exit_code=error.exit_code)
        report.add("error.kind", error.kind)
        report.add("error.detail", str(error))
        return report
