"""``support``: the support subgroup H_rho of an evaluation prime."""

import argparse

from eqloc.commands.base import CommandOutput
from eqloc.core.dependencies import CommandContext, read_json_argument
from eqloc.schemas.characters import CharacterGroupSchema, EvaluationSchema, PrimeSupportResponse
from eqloc.schemas.common import load_schema
from eqloc.services.characters import prime_support


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("support", parents=parents, help="Support H_rho of a torsion-point evaluation")
    parser.add_argument("--group", required=True, help='Character group, e.g. \'{"rank": 2, "torsion": [3]}\'')
    parser.add_argument("--evaluation", required=True, help="One [a, m] pair per generator, e.g. '[[1, 3], [0, 1]]'")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, context: CommandContext) -> CommandOutput:
    group = load_schema(CharacterGroupSchema, read_json_argument(args.group, "group"))
    datum = load_schema(
        EvaluationSchema,
        {"group": group.model_dump(), "evaluation": read_json_argument(args.evaluation, "evaluation")},
    ).to_model()
    result = prime_support(datum)
    response = PrimeSupportResponse.from_model(result)

    congruence = " + ".join(f"{w}*x{i + 1}" for i, w in enumerate(result.weights)) or "0"
    kernel = ", ".join(str(chi) for chi in result.kernel_generators) or "none"
    text = "\n".join(
        [
            f"K_rho: {congruence} = 0 mod {result.modulus}",
            f"kernel generators: {kernel}",
            f"H_rho characters: {result.support.describe()}",
        ]
    )
    return CommandOutput(command="support", result=response.model_dump(mode="json"), text=text)
