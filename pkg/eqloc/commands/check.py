"""``check``: invariant suites on the built-in corpus."""

import argparse

from eqloc.commands.base import CommandOutput
from eqloc.commands.sbar import parse_embedding
from eqloc.core.dependencies import CommandContext
from eqloc.core.exceptions import EXIT_CHECK_FAILED, EXIT_OK, MalformedInputError
from eqloc.schemas.lrr import CaseReport, CheckResponse, CheckResultSchema
from eqloc.services.checks import InvariantChecker
from eqloc.services.corpus import all_cases, corpus_case


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("check", parents=parents, help="Run the invariant suites on a corpus case")
    parser.add_argument("--case", required=True, help="Corpus case name (e.g. p2-o1) or 'all'")
    parser.add_argument("--embedding", default=None, help="Add a decomposition check along mu_n -> T")
    parser.add_argument("--n", type=int, default=None, help="Order of mu_n for --embedding")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, context: CommandContext) -> CommandOutput:
    cases = all_cases() if args.case == "all" else [corpus_case(args.case)]
    embeddings = None
    if args.embedding is not None:
        if args.n is None:
            raise MalformedInputError("--embedding needs --n", {"field": "n"})
        embeddings = [(args.n, tuple(parse_embedding(args.embedding)))]

    checker = InvariantChecker(context.config)
    reports = []
    lines = []
    for case in cases:
        results = checker.run_case(case, embeddings)
        passed = all(result.passed for result in results)
        reports.append(
            CaseReport(
                case=case.name,
                passed=passed,
                checks=[CheckResultSchema.from_model(result) for result in results],
            )
        )
        verdicts = ", ".join(f"{result.name}={'ok' if result.passed else 'FAILED'}" for result in results)
        lines.append(f"{case.name}: {verdicts}")

    passed = all(report.passed for report in reports)
    response = CheckResponse(passed=passed, cases=reports)
    return CommandOutput(
        command="check",
        result=response.model_dump(mode="json"),
        text="\n".join(lines),
        exit_code=EXIT_OK if passed else EXIT_CHECK_FAILED,
    )
