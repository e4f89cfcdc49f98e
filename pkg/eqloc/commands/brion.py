"""``brion``: lattice-point generating function and count of a polytope."""

import argparse

from eqloc.commands.base import CommandOutput
from eqloc.core.dependencies import CommandContext, read_json_argument
from eqloc.schemas.common import load_schema
from eqloc.schemas.lrr import BrionResponse
from eqloc.schemas.rep_ring import RingElementSchema
from eqloc.schemas.toric import PolytopeSchema
from eqloc.services.lrr import brion_generating_function
from eqloc.services.rep_ring import augmentation
from eqloc.services.toric import make_polytope


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("brion", parents=parents, help="Brion's formula for a lattice polytope")
    parser.add_argument("--polytope", required=True, help="Polytope JSON file or inline JSON")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, context: CommandContext) -> CommandOutput:
    schema = load_schema(PolytopeSchema, read_json_argument(args.polytope, "polytope"))
    polytope = make_polytope(schema.dim, [(ineq.normal, ineq.offset) for ineq in schema.inequalities])
    generating_function = brion_generating_function(polytope)
    # augmentation only after the fractions have been summed
    count = int(augmentation(generating_function))
    response = BrionResponse(generating_function=RingElementSchema.from_model(generating_function), count=count)
    return CommandOutput(
        command="brion",
        result=response.model_dump(mode="json"),
        text=f"{generating_function}\ncount: {count}",
    )
