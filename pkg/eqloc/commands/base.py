"""Shared pieces of the command modules."""

import argparse
import json
from dataclasses import dataclass
from typing import Any

from eqloc.core.dependencies import CommandContext
from eqloc.core.exceptions import EXIT_OK
from eqloc.schemas.common import SuccessResponse


@dataclass(frozen=True)
class CommandOutput:
    """What a handler produced: JSON payload, text rendering and the exit code."""

    command: str
    result: dict[str, Any]
    text: str
    exit_code: int = EXIT_OK

    def render(self, context: CommandContext) -> str:
        if context.as_json:
            envelope = SuccessResponse(command=self.command, result=self.result)
            return json.dumps(envelope.model_dump(mode="json"), sort_keys=True)
        return self.text


def format_parent() -> argparse.ArgumentParser:
    """Options shared by every subcommand."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--format",
        choices=("text", "json"),
        default=None,
        help="Output format (default: EQLOC_DEFAULT_FORMAT, normally text)",
    )
    return parent
