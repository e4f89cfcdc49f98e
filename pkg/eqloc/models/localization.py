"""Localized representation ring models."""

from dataclasses import dataclass

from eqloc.models.characters import Character, CharacterGroup, Subgroup
from eqloc.models.rep_ring import RingElement, render, render_monomial


@dataclass(frozen=True)
class MultiplicativeSet:
    """S_H: generated by 1 - t^chi for characters chi nontrivial on H."""

    group: CharacterGroup
    subgroup: Subgroup


@dataclass(frozen=True, eq=False)
class LocalizedElement:
    """numerator / prod (1 - t^chi) over the multiset ``denominator``.

    Equality of values is semantic (``services.localization.frac_eq``); the
    dataclass itself is compared by identity.
    """

    numerator: RingElement
    denominator: tuple[Character, ...]
    multiplicative_set: MultiplicativeSet

    def __post_init__(self) -> None:
        object.__setattr__(self, "denominator", tuple(sorted(self.denominator, key=Character.sort_key)))

    @property
    def group(self) -> CharacterGroup:
        return self.multiplicative_set.group

    def __str__(self) -> str:
        numerator = render(self.numerator)
        if not self.denominator:
            return numerator
        if len(self.numerator) > 1:
            numerator = f"({numerator})"
        factors = "".join(f"(1-{render_monomial(chi)})" for chi in self.denominator)
        return f"{numerator} / {factors}"
