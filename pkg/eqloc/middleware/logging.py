"""Command logging middleware."""

import argparse
import logging
import time
from collections.abc import Callable
from uuid import uuid4

from eqloc.commands.base import CommandOutput
from eqloc.core.dependencies import CommandContext

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, CommandContext], CommandOutput]


class CommandLoggingMiddleware:
    """Wraps a command handler with start/completion/failure logging."""

    def __init__(self, handler: Handler):
        self.handler = handler

    def __call__(self, args: argparse.Namespace, context: CommandContext) -> CommandOutput:
        run_id = str(uuid4())
        context.run_id = run_id

        start_time = time.time()
        logger.info(
            "Command started",
            extra={"run_id": run_id, "command": args.command},
        )

        try:
            output = self.handler(args, context)

            duration = time.time() - start_time
            logger.info(
                "Command completed",
                extra={
                    "run_id": run_id,
                    "command": args.command,
                    "exit_code": output.exit_code,
                    "duration_ms": round(duration * 1000, 2),
                },
            )
            return output

        except Exception as e:
            duration = time.time() - start_time
            logger.error(
                "Command failed",
                extra={
                    "run_id": run_id,
                    "command": args.command,
                    "error": str(e),
                    "duration_ms": round(duration * 1000, 2),
                },
            )
            raise
