"""``sbar``: membership of an element of R(T)_{1/r} in S-bar_{mu_n}."""

import argparse

from eqloc.commands.base import CommandOutput
from eqloc.core.dependencies import CommandContext, read_json_argument
from eqloc.core.exceptions import EXIT_CHECK_FAILED, EXIT_OK, MalformedInputError
from eqloc.schemas.common import load_schema
from eqloc.schemas.cyclotomic import PhiComponentSchema
from eqloc.schemas.lrr import SbarResponse
from eqloc.schemas.rep_ring import RingElementSchema
from eqloc.services.cyclotomic import phi_n_component, restrict_to_mu_n


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("sbar", parents=parents, help="Is the element in S-bar_{mu_n}?")
    parser.add_argument("--element", required=True, help="Term list of an element of R(T)_{1/r}")
    parser.add_argument("--embedding", required=True, help="Exponent vector c of mu_n -> T, e.g. '[1, 1]'")
    parser.add_argument("--n", type=int, required=True, help="Order of mu_n")
    parser.add_argument("--r", type=int, required=True, help="Inverted integer r")
    parser.set_defaults(handler=handle)


def parse_embedding(value: str) -> list[int]:
    embedding = read_json_argument(value, "embedding")
    if not isinstance(embedding, list) or not all(isinstance(c, int) for c in embedding):
        raise MalformedInputError("--embedding must be a list of integers", {"field": "embedding"})
    return embedding


def handle(args: argparse.Namespace, context: CommandContext) -> CommandOutput:
    element = load_schema(RingElementSchema, read_json_argument(args.element, "element")).to_model()
    embedding = parse_embedding(args.embedding)
    component = phi_n_component(restrict_to_mu_n(element, embedding, args.n, args.r))
    member = component.is_one
    response = SbarResponse(
        n=args.n,
        r=args.r,
        embedding=embedding,
        phi_n_component=PhiComponentSchema.from_model(component),
        member=member,
    )
    return CommandOutput(
        command="sbar",
        result=response.model_dump(mode="json"),
        text="true" if member else "false",
        exit_code=EXIT_OK if member else EXIT_CHECK_FAILED,
    )
