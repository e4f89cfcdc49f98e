"""``decompose``: Phi_d components of the restriction to mu_n."""

import argparse

from eqloc.commands.base import CommandOutput
from eqloc.commands.sbar import parse_embedding
from eqloc.core.dependencies import CommandContext, read_json_argument
from eqloc.schemas.common import load_schema
from eqloc.schemas.cyclotomic import CyclotomicImageSchema, DecompositionResponse, PhiComponentSchema
from eqloc.schemas.rep_ring import RingElementSchema
from eqloc.services.cyclotomic import compute_r, crt_decompose, crt_reconstruct, restrict_to_mu_n


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("decompose", parents=parents, help="CRT split over the Phi_d, d | n")
    parser.add_argument("--element", required=True, help="Term list of an element of R(T)_{1/r}")
    parser.add_argument("--embedding", required=True, help="Exponent vector c of mu_n -> T")
    parser.add_argument("--n", type=int, required=True, help="Order of mu_n")
    parser.add_argument("--r", type=int, default=None, help="Inverted integer r (default: n)")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, context: CommandContext) -> CommandOutput:
    element = load_schema(RingElementSchema, read_json_argument(args.element, "element")).to_model()
    embedding = parse_embedding(args.embedding)
    r = args.r if args.r is not None else compute_r([args.n])
    image = restrict_to_mu_n(element, embedding, args.n, r)
    components = crt_decompose(image)
    response = DecompositionResponse(
        image=CyclotomicImageSchema.from_model(image),
        components=[PhiComponentSchema.from_model(comp) for comp in components],
        reconstructs=crt_reconstruct(components) == image,
    )
    lines = [f"mu_{args.n}: {image}"] + [f"Phi_{comp.d}: {comp}" for comp in components]
    return CommandOutput(command="decompose", result=response.model_dump(mode="json"), text="\n".join(lines))
