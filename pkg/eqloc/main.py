"""Command-line entry point."""

import json
import logging
import sys
from collections.abc import Sequence

from eqloc.commands.router import build_parser
from eqloc.core.config import Settings, settings
from eqloc.core.dependencies import CommandContext
from eqloc.core.exceptions import EXIT_INPUT_ERROR, EngineException, InternalError
from eqloc.core.logging import configure_logging
from eqloc.middleware.logging import CommandLoggingMiddleware
from eqloc.schemas.common import ErrorResponse

logger = logging.getLogger(__name__)


def _report_error(exc: EngineException, context: CommandContext | None) -> None:
    if context is not None and context.as_json:
        envelope = ErrorResponse.model_validate(exc.to_payload())
        print(json.dumps(envelope.model_dump(mode="json"), sort_keys=True, default=str), file=sys.stderr)
        return
    print(f"error: {exc.code}: {exc.message}", file=sys.stderr)
    if exc.details:
        print(f"  details: {json.dumps(exc.details, sort_keys=True, default=str)}", file=sys.stderr)


def run(argv: Sequence[str] | None = None, config: Settings = settings) -> int:
    """Parse ``argv``, dispatch one subcommand and return the exit code (0 ok, 1 check failed, 2 error)."""
    configure_logging(config)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 for --help / --version
        return e.code if isinstance(e.code, int) else EXIT_INPUT_ERROR

    context = CommandContext(config=config, output_format=args.format)
    handler = CommandLoggingMiddleware(args.handler)
    try:
        output = handler(args, context)
    except EngineException as e:
        _report_error(e, context)
        return e.exit_code
    except Exception:
        logger.exception("Unhandled exception")
        _report_error(InternalError("An internal engine error occurred"), context)
        return EXIT_INPUT_ERROR

    print(output.render(context))
    return output.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
