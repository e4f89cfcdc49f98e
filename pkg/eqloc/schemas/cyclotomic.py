"""Cyclotomic image schemas; coefficient vectors are exact rational strings."""

from pydantic import Field

from eqloc.models.cyclotomic import CyclotomicImage, PhiComponent
from eqloc.schemas.common import BaseSchema, format_rational, parse_rational


class CyclotomicImageSchema(BaseSchema):
    """Element of Z[1/r][t]/(t^n - 1)."""

    n: int = Field(..., ge=1)
    r: int = Field(..., ge=1)
    coeffs: list[str]

    def to_model(self) -> CyclotomicImage:
        return CyclotomicImage(n=self.n, r=self.r, coeffs=tuple(parse_rational(c) for c in self.coeffs))

    @classmethod
    def from_model(cls, image: CyclotomicImage) -> "CyclotomicImageSchema":
        return cls(n=image.n, r=image.r, coeffs=[format_rational(c) for c in image.coeffs])


class PhiComponentSchema(BaseSchema):
    """Element of Z[1/r][t]/Phi_d(t)."""

    n: int = Field(..., ge=1)
    d: int = Field(..., ge=1)
    r: int = Field(..., ge=1)
    coeffs: list[str]
    text: str | None = None

    def to_model(self) -> PhiComponent:
        return PhiComponent(n=self.n, d=self.d, r=self.r, coeffs=tuple(parse_rational(c) for c in self.coeffs))

    @classmethod
    def from_model(cls, component: PhiComponent) -> "PhiComponentSchema":
        return cls(
            n=component.n,
            d=component.d,
            r=component.r,
            coeffs=[format_rational(c) for c in component.coeffs],
            text=str(component),
        )


class DecompositionResponse(BaseSchema):
    """Restriction to mu_n and its Phi_d components."""

    image: CyclotomicImageSchema
    components: list[PhiComponentSchema]
    reconstructs: bool
