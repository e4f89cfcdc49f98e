"""Common schema utilities and base classes."""

import json
from fractions import Fraction
from typing import Any, TypeVar

from pydantic import BaseModel, ConfigDict
from pydantic import ValidationError as PydanticValidationError

from eqloc.core.exceptions import MalformedInputError


class BaseSchema(BaseModel):
    """Base schema with common configuration."""

    model_config = ConfigDict(
        populate_by_name=True,
        str_strip_whitespace=True,
        extra="forbid",
        frozen=True,
    )


S = TypeVar("S", bound=BaseSchema)


def load_schema(schema: type[S], description: Any) -> S:
    """Validate a JSON string or decoded object against ``schema``.

    Decoding errors report line and column; validation errors report the
    field path of the first offending entry.
    """
    if isinstance(description, (str, bytes)):
        try:
            description = json.loads(description)
        except json.JSONDecodeError as e:
            raise MalformedInputError(
                f"Invalid JSON: {e.msg}",
                {"line": e.lineno, "column": e.colno},
            ) from e
    try:
        return schema.model_validate(description)
    except PydanticValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first.get("loc", ()))
        raise MalformedInputError(
            f"{schema.__name__}: {first.get('msg')} at '{field}'",
            {"field": field, "errors": len(e.errors())},
        ) from e


def parse_rational(value: str | int) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise MalformedInputError(f"Not an exact rational: {value!r}", {"value": str(value)}) from e


def format_rational(value: Fraction) -> str:
    return str(value)


class SuccessResponse(BaseSchema):
    """Standard success envelope for ``--format json``."""

    success: bool = True
    command: str
    result: dict[str, Any]


class ErrorDetail(BaseSchema):
    """Error detail structure."""

    code: str
    message: str
    details: dict[str, Any] = {}


class ErrorResponse(BaseSchema):
    """Standard error response."""

    success: bool = False
    error: ErrorDetail
