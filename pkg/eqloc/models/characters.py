"""Character group models."""

from dataclasses import dataclass, field

from eqloc.core.exceptions import GroupMismatchError, InvalidOrderError


@dataclass(frozen=True)
class CharacterGroup:
    """Finitely generated abelian group Z^rank + sum of Z/n_i, the characters of D(G)."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise GroupMismatchError("Rank must be non-negative", {"rank": self.rank})
        for order in self.torsion:
            if order < 2:
                raise InvalidOrderError(order)
        object.__setattr__(self, "torsion", tuple(sorted(self.torsion)))

    @property
    def ngens(self) -> int:
        return self.rank + len(self.torsion)

    @property
    def is_torsion_free(self) -> bool:
        return not self.torsion

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def zero(self) -> "Character":
        return Character(self, (0,) * self.rank, (0,) * len(self.torsion))

    def character(self, free: tuple[int, ...] | list[int], tors: tuple[int, ...] | list[int] = ()) -> "Character":
        """Build a character, reducing torsion entries into canonical range."""
        if not tors and self.torsion:
            tors = (0,) * len(self.torsion)
        return Character(self, tuple(free), tuple(tors))

    def from_vector(self, vector: tuple[int, ...] | list[int]) -> "Character":
        """Build a character from the concatenated (free, torsion) coordinates."""
        if len(vector) != self.ngens:
            raise GroupMismatchError(
                "Vector length does not match number of generators",
                {"expected": self.ngens, "got": len(vector)},
            )
        return Character(self, tuple(vector[: self.rank]), tuple(vector[self.rank :]))

    def generators(self) -> list["Character"]:
        basis = []
        for i in range(self.ngens):
            basis.append(self.from_vector(tuple(1 if j == i else 0 for j in range(self.ngens))))
        return basis

    def describe(self) -> str:
        parts = ["Z"] * self.rank + [f"Z/{n}" for n in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True, order=False)
class Character:
    """Element of a character group, in additive notation."""

    group: CharacterGroup
    free: tuple[int, ...]
    tors: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if len(self.free) != self.group.rank or len(self.tors) != len(self.group.torsion):
            raise GroupMismatchError(
                "Character shape does not match its group",
                {"group": self.group.describe(), "free": list(self.free), "tors": list(self.tors)},
            )
        object.__setattr__(self, "free", tuple(int(e) for e in self.free))
        object.__setattr__(
            self,
            "tors",
            tuple(int(e) % n for e, n in zip(self.tors, self.group.torsion)),
        )

    @property
    def vector(self) -> tuple[int, ...]:
        return self.free + self.tors

    @property
    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.tors)

    def canonical(self) -> "Character":
        return Character(self.group, self.free, self.tors)

    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Lexicographic order: free part, then torsion part."""
        return (self.free, self.tors)

    def _check(self, other: "Character") -> None:
        if self.group != other.group:
            raise GroupMismatchError(
                "Characters belong to different groups",
                {"left": self.group.describe(), "right": other.group.describe()},
            )

    def __add__(self, other: "Character") -> "Character":
        self._check(other)
        return Character(
            self.group,
            tuple(a + b for a, b in zip(self.free, other.free)),
            tuple(a + b for a, b in zip(self.tors, other.tors)),
        )

    def __neg__(self) -> "Character":
        return Character(self.group, tuple(-a for a in self.free), tuple(-a for a in self.tors))

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def scale(self, k: int) -> "Character":
        return Character(self.group, tuple(k * a for a in self.free), tuple(k * a for a in self.tors))

    def __str__(self) -> str:
        return f"({', '.join(map(str, self.free))}{' | ' if self.tors else ''}{', '.join(map(str, self.tors))})"


@dataclass(frozen=True)
class Subgroup:
    """Closed diagonalizable subgroup H of G, given by the restriction G^v -> H^v.

    ``matrix`` has one row per generator of ``target`` and one column per
    generator of ``ambient``; it acts on concatenated (free, torsion) vectors.
    Built through ``services.characters.make_subgroup`` which validates it.
    """

    ambient: CharacterGroup
    target: CharacterGroup
    matrix: tuple[tuple[int, ...], ...]
    label: str = ""


@dataclass(frozen=True)
class EvaluationDatum:
    """Torsion point g of G: generator i evaluates to zeta_{m_i}^{a_i}."""

    group: CharacterGroup
    values: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class PrimeSupport:
    """K_rho as a congruence system plus generators, and the support H_rho."""

    datum: EvaluationDatum
    weights: tuple[int, ...]
    modulus: int
    kernel_generators: tuple[Character, ...]
    support: CharacterGroup
