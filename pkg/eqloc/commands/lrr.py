"""``lrr``: equivariant Euler characteristic of O(D) on a smooth complete toric variety."""

import argparse

from eqloc.commands.base import CommandOutput
from eqloc.core.dependencies import CommandContext, read_json_argument, resolve_fan
from eqloc.schemas.common import load_schema
from eqloc.schemas.lrr import EulerCharacteristicResponse
from eqloc.schemas.rep_ring import RingElementSchema
from eqloc.schemas.toric import DivisorSchema, FanSchema
from eqloc.services.lrr import euler_characteristic
from eqloc.services.toric import cartier_from_divisor


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("lrr", parents=parents, help="Fixed-point formula for chi(X, O(D))")
    parser.add_argument("--fan", required=True, help="Corpus fan name, JSON file or inline JSON")
    parser.add_argument("--divisor", required=True, help='Divisor, e.g. \'{"coeffs": [0, 2]}\'')
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace, context: CommandContext) -> CommandOutput:
    fan = resolve_fan(args.fan, context.config)
    divisor = load_schema(DivisorSchema, read_json_argument(args.divisor, "divisor"))
    data = cartier_from_divisor(fan, divisor.coeffs)
    chi = euler_characteristic(fan, data, config=context.config)
    response = EulerCharacteristicResponse(
        fan=FanSchema.from_model(fan),
        coeffs=list(data.coeffs),
        euler_characteristic=RingElementSchema.from_model(chi),
    )
    return CommandOutput(command="lrr", result=response.model_dump(mode="json"), text=str(chi))
