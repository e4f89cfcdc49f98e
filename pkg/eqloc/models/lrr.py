"""Fixed-point restriction models and check results."""

from dataclasses import dataclass, field
from typing import Any

from eqloc.core.exceptions import GroupMismatchError, InconsistentDataError, SetMismatchError
from eqloc.models.localization import LocalizedElement, MultiplicativeSet
from eqloc.models.toric import Fan


@dataclass(frozen=True)
class LocalizedTuple:
    """A K-class seen through its restrictions: one localized entry per fixed point (cone order)."""

    fan: Fan
    entries: tuple[LocalizedElement, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.fan.cones):
            raise InconsistentDataError(
                "A localized tuple needs one entry per fixed point",
                {"entries": len(self.entries), "fixed_points": len(self.fan.cones)},
            )
        for k, entry in enumerate(self.entries):
            if entry.group != self.fan.group:
                raise GroupMismatchError(f"Entry {k} does not live over the fan's torus", {"entry": k})
            if entry.multiplicative_set != self.entries[0].multiplicative_set:
                raise SetMismatchError()

    @property
    def multiplicative_set(self) -> MultiplicativeSet:
        return self.entries[0].multiplicative_set


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)
