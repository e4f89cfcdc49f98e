"""Toric input schemas: fans, divisors, polytopes."""

from pydantic import Field, model_validator

from eqloc.models.toric import Fan, Polytope
from eqloc.schemas.common import BaseSchema


class FanSchema(BaseSchema):
    """``{"dim": 2, "rays": [[1,0],[0,1],[-1,-1]], "cones": [[0,1],[1,2],[2,0]]}``"""

    dim: int = Field(..., ge=0)
    rays: list[list[int]]
    cones: list[list[int]]
    name: str | None = None

    @classmethod
    def from_model(cls, fan: Fan) -> "FanSchema":
        return cls(
            dim=fan.dim,
            rays=[list(ray) for ray in fan.rays],
            cones=[list(cone) for cone in fan.cones],
            name=fan.name or None,
        )


class DivisorSchema(BaseSchema):
    """``{"coeffs": [0,0,1]}``: D = sum a_rho D_rho."""

    coeffs: list[int]


class InequalitySchema(BaseSchema):
    """<m, normal> >= -offset."""

    normal: list[int]
    offset: int


class PolytopeSchema(BaseSchema):
    """Lattice polytope in inequality form; ``{"dim": 0}`` is the single point."""

    dim: int = Field(..., ge=0)
    inequalities: list[InequalitySchema] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_lengths(self) -> "PolytopeSchema":
        for ineq in self.inequalities:
            if len(ineq.normal) != self.dim:
                raise ValueError(f"normal {ineq.normal} does not have length {self.dim}")
        return self

    @classmethod
    def from_model(cls, polytope: Polytope) -> "PolytopeSchema":
        return cls(
            dim=polytope.dim,
            inequalities=[InequalitySchema(normal=list(v), offset=a) for v, a in polytope.inequalities],
        )
