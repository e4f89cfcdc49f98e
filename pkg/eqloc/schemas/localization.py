"""Localized element schemas."""

from pydantic import Field

from eqloc.models.localization import LocalizedElement, MultiplicativeSet
from eqloc.schemas.characters import CharacterSchema
from eqloc.schemas.common import BaseSchema
from eqloc.schemas.rep_ring import RingElementSchema
from eqloc.services.localization import make_fraction


class LocalizedElementSchema(BaseSchema):
    """num / prod (1 - t^chi) for chi in den."""

    num: RingElementSchema
    den: list[CharacterSchema] = Field(default_factory=list)

    def to_model(self, S: MultiplicativeSet) -> LocalizedElement:
        numerator = self.num.to_model(S.group)
        return make_fraction(numerator, [chi.to_model(S.group) for chi in self.den], S)

    @classmethod
    def from_model(cls, element: LocalizedElement) -> "LocalizedElementSchema":
        return cls(
            num=RingElementSchema.from_model(element.numerator),
            den=[CharacterSchema.from_model(chi) for chi in element.denominator],
        )
