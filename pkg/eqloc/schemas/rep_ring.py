"""Representation ring schemas: JSON term lists."""

from pydantic import Field

from eqloc.core.exceptions import MalformedInputError
from eqloc.models.characters import CharacterGroup
from eqloc.models.rep_ring import RingElement
from eqloc.schemas.characters import CharacterGroupSchema
from eqloc.schemas.common import BaseSchema, format_rational, parse_rational


class TermSchema(BaseSchema):
    """One term coeff * t^(free | tors); coefficients are exact rational strings."""

    coeff: str | int
    free: list[int] = Field(default_factory=list)
    tors: list[int] = Field(default_factory=list)


class RingElementSchema(BaseSchema):
    """Element of R(G) as a term list; ``group`` defaults to the torus of the term length."""

    group: CharacterGroupSchema | None = None
    terms: list[TermSchema] = Field(default_factory=list)
    text: str | None = Field(default=None, description="Canonical rendering (output only)")

    def to_model(self, group: CharacterGroup | None = None) -> RingElement:
        if group is None:
            if self.group is not None:
                group = self.group.to_model()
            elif self.terms:
                group = CharacterGroup(len(self.terms[0].free))
            else:
                raise MalformedInputError("Empty term list needs an explicit group", {"field": "group"})
        try:
            terms = [(group.character(term.free, term.tors), parse_rational(term.coeff)) for term in self.terms]
        except MalformedInputError:
            raise
        except Exception as e:
            raise MalformedInputError(f"Term does not fit group {group.describe()}", {"field": "terms"}) from e
        return RingElement(group, terms)

    @classmethod
    def from_model(cls, element: RingElement) -> "RingElementSchema":
        return cls(
            group=CharacterGroupSchema.from_model(element.group),
            terms=[
                TermSchema(coeff=format_rational(c), free=list(chi.free), tors=list(chi.tors))
                for chi, c in element.sorted_terms()
            ],
            text=str(element),
        )
