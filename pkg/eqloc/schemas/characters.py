"""Character group schemas."""

from pydantic import Field

from eqloc.models.characters import Character, CharacterGroup, EvaluationDatum, PrimeSupport, Subgroup
from eqloc.schemas.common import BaseSchema
from eqloc.services.characters import make_character_group, make_evaluation, make_subgroup


class CharacterGroupSchema(BaseSchema):
    """G^v = Z^rank + sum Z/n_i."""

    rank: int = Field(..., ge=0)
    torsion: list[int] = Field(default_factory=list)

    def to_model(self) -> CharacterGroup:
        return make_character_group(self.rank, self.torsion)

    @classmethod
    def from_model(cls, group: CharacterGroup) -> "CharacterGroupSchema":
        return cls(rank=group.rank, torsion=list(group.torsion))


class CharacterSchema(BaseSchema):
    """A character: free exponents and torsion exponents."""

    free: list[int] = Field(default_factory=list)
    tors: list[int] = Field(default_factory=list)

    def to_model(self, group: CharacterGroup) -> Character:
        return group.character(self.free, self.tors)

    @classmethod
    def from_model(cls, character: Character) -> "CharacterSchema":
        return cls(free=list(character.free), tors=list(character.tors))


class SubgroupSchema(BaseSchema):
    """H inside G given by the restriction matrix G^v -> H^v."""

    ambient: CharacterGroupSchema
    target: CharacterGroupSchema
    matrix: list[list[int]]
    label: str = ""

    def to_model(self) -> Subgroup:
        return make_subgroup(self.ambient.to_model(), self.target.to_model(), self.matrix, self.label)

    @classmethod
    def from_model(cls, subgroup: Subgroup) -> "SubgroupSchema":
        return cls(
            ambient=CharacterGroupSchema.from_model(subgroup.ambient),
            target=CharacterGroupSchema.from_model(subgroup.target),
            matrix=[list(row) for row in subgroup.matrix],
            label=subgroup.label,
        )


class EvaluationSchema(BaseSchema):
    """Torsion point: one [a, m] pair per generator (generator -> zeta_m^a)."""

    group: CharacterGroupSchema
    evaluation: list[tuple[int, int]]

    def to_model(self) -> EvaluationDatum:
        return make_evaluation(self.group.to_model(), self.evaluation)


class PrimeSupportResponse(BaseSchema):
    """K_rho and H_rho for an evaluation prime."""

    group: CharacterGroupSchema
    congruence_weights: list[int]
    congruence_modulus: int
    kernel_generators: list[CharacterSchema]
    support: CharacterGroupSchema

    @classmethod
    def from_model(cls, result: PrimeSupport) -> "PrimeSupportResponse":
        return cls(
            group=CharacterGroupSchema.from_model(result.datum.group),
            congruence_weights=list(result.weights),
            congruence_modulus=result.modulus,
            kernel_generators=[CharacterSchema.from_model(chi) for chi in result.kernel_generators],
            support=CharacterGroupSchema.from_model(result.support),
        )
