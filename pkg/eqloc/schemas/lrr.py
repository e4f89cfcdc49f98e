"""Result schemas for the LRR commands."""

from typing import Any

from pydantic import Field

from eqloc.models.lrr import CheckResult
from eqloc.schemas.common import BaseSchema
from eqloc.schemas.cyclotomic import PhiComponentSchema
from eqloc.schemas.rep_ring import RingElementSchema
from eqloc.schemas.toric import FanSchema


class EulerCharacteristicResponse(BaseSchema):
    fan: FanSchema
    coeffs: list[int]
    euler_characteristic: RingElementSchema


class BrionResponse(BaseSchema):
    generating_function: RingElementSchema
    count: int


class SbarResponse(BaseSchema):
    n: int
    r: int
    embedding: list[int]
    phi_n_component: PhiComponentSchema
    member: bool


class CheckResultSchema(BaseSchema):
    name: str
    passed: bool
    details: dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def from_model(cls, result: CheckResult) -> "CheckResultSchema":
        return cls(name=result.name, passed=result.passed, details=result.details)


class CaseReport(BaseSchema):
    case: str
    passed: bool
    checks: list[CheckResultSchema]


class CheckResponse(BaseSchema):
    passed: bool
    cases: list[CaseReport]
