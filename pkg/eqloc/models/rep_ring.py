"""Representation ring models: sparse group-ring elements and split bundle classes."""

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Union

from eqloc.core.exceptions import GroupMismatchError
from eqloc.models.characters import Character, CharacterGroup

Scalar = Union[int, Fraction]


def _plain(coeff: Fraction) -> Scalar:
    """Integral coefficients as plain ``int``."""
    return coeff.numerator if coeff.denominator == 1 else coeff


def display_key(character: Character) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Printing order: total degree, then descending exponents."""
    degree = sum(abs(e) for e in character.free) + sum(character.tors)
    return (degree, tuple(-e for e in character.free), tuple(-e for e in character.tors))


class RingElement:
    """Element of Z[G^v] (or its Z[1/r]-linearization): a finite map character -> coefficient.

    Zero coefficients are never stored and torsion exponents are canonical,
    so relations such as t^n = 1 in Z[Z/n] hold on construction.
    """

    __slots__ = ("group", "_terms")

    def __init__(self, group: CharacterGroup, terms: Mapping[Character, Scalar] | Iterable[tuple[Character, Scalar]] = ()):
        accumulated: dict[Character, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for character, coeff in items:
            if character.group != group:
                raise GroupMismatchError(
                    "Term character does not belong to the ring's group",
                    {"group": group.describe(), "character": str(character)},
                )
            accumulated[character] = accumulated.get(character, Fraction(0)) + Fraction(coeff)
        self.group = group
        self._terms: Mapping[Character, Fraction] = MappingProxyType(
            {chi: c for chi, c in accumulated.items() if c != 0}
        )

    # ------------------------------------------
    # Constructors
    # ------------------------------------------

    @classmethod
    def zero(cls, group: CharacterGroup) -> "RingElement":
        return cls(group)

    @classmethod
    def constant(cls, group: CharacterGroup, value: Scalar) -> "RingElement":
        return cls(group, {group.zero(): value})

    @classmethod
    def one(cls, group: CharacterGroup) -> "RingElement":
        return cls.constant(group, 1)

    @classmethod
    def monomial(cls, character: Character, coeff: Scalar = 1) -> "RingElement":
        return cls(character.group, {character: coeff})

    @classmethod
    def from_terms(cls, group: CharacterGroup, terms: Mapping[tuple[int, ...], Scalar]) -> "RingElement":
        """Build from free exponent vectors, e.g. ``{(0, 0): 1, (1, -1): 2}``."""
        return cls(group, [(group.character(free), coeff) for free, coeff in terms.items()])

    # ------------------------------------------
    # Access
    # ------------------------------------------

    @property
    def terms(self) -> Mapping[Character, Fraction]:
        return self._terms

    def coefficient(self, character: Character) -> Fraction:
        return self._terms.get(character, Fraction(0))

    def support(self) -> list[Character]:
        return sorted(self._terms, key=Character.sort_key)

    def sorted_terms(self) -> list[tuple[Character, Fraction]]:
        """Terms in lexicographic character order (free part, then torsion part)."""
        return [(chi, self._terms[chi]) for chi in self.support()]

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __iter__(self) -> Iterator[tuple[Character, Fraction]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    # ------------------------------------------
    # Arithmetic
    # ------------------------------------------

    def _coerce(self, other: "RingElement | Scalar") -> "RingElement":
        if isinstance(other, RingElement):
            if other.group != self.group:
                raise GroupMismatchError(
                    "Ring elements belong to different groups",
                    {"left": self.group.describe(), "right": other.group.describe()},
                )
            return other
        return RingElement.constant(self.group, other)

    def __add__(self, other: "RingElement | Scalar") -> "RingElement":
        rhs = self._coerce(other)
        return RingElement(self.group, list(self._terms.items()) + list(rhs._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        return RingElement(self.group, {chi: -c for chi, c in self._terms.items()})

    def __sub__(self, other: "RingElement | Scalar") -> "RingElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "RingElement":
        return self._coerce(other) - self

    def __mul__(self, other: "RingElement | Scalar") -> "RingElement":
        if not isinstance(other, RingElement):
            return RingElement(self.group, {chi: c * other for chi, c in self._terms.items()})
        rhs = self._coerce(other)
        torsion = self.group.torsion
        right = [(psi.free, psi.tors, _plain(d)) for psi, d in rhs._terms.items()]
        products: dict[tuple[tuple[int, ...], tuple[int, ...]], Scalar] = {}
        for chi, c in self._terms.items():
            left = _plain(c)
            for free, tors, d in right:
                key = (
                    tuple(a + b for a, b in zip(chi.free, free)),
                    tuple((a + b) % n for a, b, n in zip(chi.tors, tors, torsion)),
                )
                products[key] = products.get(key, 0) + left * d
        result = RingElement(self.group)
        result._terms = MappingProxyType(
            {
                Character(self.group, free, tors): Fraction(coeff)
                for (free, tors), coeff in products.items()
                if coeff != 0
            }
        )
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RingElement":
        if exponent < 0:
            raise ValueError("Negative powers are not ring elements")
        result = RingElement.one(self.group)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, character: Character) -> "RingElement":
        """Multiply by the monomial t^chi."""
        return RingElement(self.group, {chi + character: c for chi, c in self._terms.items()})

    # ------------------------------------------
    # Comparison and rendering
    # ------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RingElement.constant(self.group, other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.group == other.group and dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash((self.group, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"RingElement({self})"

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class EquivariantBundleClass:
    """A class that splits into one-dimensional eigenspaces: a multiset of characters."""

    characters: tuple[Character, ...]

    def __post_init__(self) -> None:
        groups = {chi.group for chi in self.characters}
        if len(groups) > 1:
            raise GroupMismatchError("Bundle characters belong to different groups")
        object.__setattr__(self, "characters", tuple(sorted(self.characters, key=Character.sort_key)))

    @classmethod
    def of(cls, characters: Iterable[Character]) -> "EquivariantBundleClass":
        return cls(tuple(characters))

    def __add__(self, other: "EquivariantBundleClass") -> "EquivariantBundleClass":
        """Direct sum (multiset union)."""
        return EquivariantBundleClass(self.characters + other.characters)

    def __len__(self) -> int:
        return len(self.characters)


# ==========================================
# Text rendering
# ==========================================


def variable_names(group: CharacterGroup) -> list[str]:
    """t (or t1..tr) for free generators, u (or u1..us) for torsion generators."""
    free = ["t"] if group.rank == 1 else [f"t{i + 1}" for i in range(group.rank)]
    tors = ["u"] if len(group.torsion) == 1 else [f"u{i + 1}" for i in range(len(group.torsion))]
    return free + tors


def render_monomial(character: Character) -> str:
    names = variable_names(character.group)
    factors = []
    for name, exponent in zip(names, character.vector):
        if exponent == 0:
            continue
        factors.append(name if exponent == 1 else f"{name}^{exponent}")
    return "*".join(factors)


def render(element: RingElement) -> str:
    """Canonical text form, e.g. ``1 - t1 + t1*t2^-1`` or ``u^3``."""
    if element.is_zero:
        return "0"
    pieces: list[str] = []
    for chi in sorted(element.terms, key=display_key):
        coeff = element.terms[chi]
        monomial = render_monomial(chi)
        magnitude = abs(coeff)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(pieces)
