"""Representation ring service: arithmetic in Z[G^v], lambda_{-1}, augmentation."""

from fractions import Fraction

from sympy import primefactors

from eqloc.core.exceptions import (
    CoefficientDomainError,
    GroupMismatchError,
    TorsionUnsupportedError,
)
from eqloc.models.characters import Character, CharacterGroup
from eqloc.models.rep_ring import EquivariantBundleClass, RingElement, render

__all__ = [
    "augmentation",
    "dual",
    "elementary_symmetric_expansion",
    "evaluate_at",
    "external_product",
    "in_z_one_over_r",
    "lambda_minus_one",
    "one_minus",
    "render",
    "ring_add",
    "ring_mul",
    "ring_neg",
    "substitute",
    "validate_r_coefficients",
]


def _same_group(a: RingElement, b: RingElement) -> None:
    if a.group != b.group:
        raise GroupMismatchError(
            "Ring elements belong to different groups",
            {"left": a.group.describe(), "right": b.group.describe()},
        )


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    _same_group(a, b)
    return a + b


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    _same_group(a, b)
    return a * b


def ring_neg(a: RingElement) -> RingElement:
    return -a


def one_minus(character: Character) -> RingElement:
    """The generator 1 - t^chi."""
    return RingElement.one(character.group) - RingElement.monomial(character)


def lambda_minus_one(bundle: EquivariantBundleClass, group: CharacterGroup | None = None) -> RingElement:
    """lambda_{-1}(N) = prod (1 - t^chi_i); 1 for the zero bundle."""
    if not bundle.characters:
        if group is None:
            raise GroupMismatchError("An empty bundle needs an explicit group")
        return RingElement.one(group)
    result = RingElement.one(bundle.characters[0].group)
    for chi in bundle.characters:
        result = result * one_minus(chi)
    return result


def elementary_symmetric_expansion(bundle: EquivariantBundleClass, group: CharacterGroup) -> RingElement:
    """sum_j (-1)^j e_j(t^chi_1, ..., t^chi_k), with e_j built by the recursion
    e_j(x_1..x_k) = e_j(x_1..x_{k-1}) + x_k e_{j-1}(x_1..x_{k-1})."""
    elementary = [RingElement.one(group)]
    for chi in bundle.characters:
        x = RingElement.monomial(chi)
        updated = [elementary[0]]
        for j in range(1, len(elementary) + 1):
            previous = elementary[j] if j < len(elementary) else RingElement.zero(group)
            updated.append(previous + x * elementary[j - 1])
        elementary = updated
    total = RingElement.zero(group)
    for j, e_j in enumerate(elementary):
        total = total + e_j if j % 2 == 0 else total - e_j
    return total


def augmentation(a: RingElement) -> Fraction:
    """Rank map: every character goes to 1."""
    return sum(a.terms.values(), Fraction(0))


def dual(a: RingElement) -> RingElement:
    """chi -> -chi (dual representation)."""
    return RingElement(a.group, {-chi: c for chi, c in a.terms.items()})


def external_product(a: RingElement, b: RingElement) -> RingElement:
    """R(G) x R(G') -> R(G x G') on torus groups, t^chi (x) t^psi -> t^(chi, psi)."""
    if not (a.group.is_torsion_free and b.group.is_torsion_free):
        raise TorsionUnsupportedError(list(a.group.torsion) + list(b.group.torsion))
    group = CharacterGroup(a.group.rank + b.group.rank)
    terms = []
    for chi, c in a.terms.items():
        for psi, d in b.terms.items():
            terms.append((group.character(chi.free + psi.free), c * d))
    return RingElement(group, terms)


def substitute(a: RingElement, matrix: list[list[int]]) -> RingElement:
    """Monomial substitution t^chi -> t^(M chi) on a torus ring."""
    if not a.group.is_torsion_free:
        raise TorsionUnsupportedError(list(a.group.torsion))
    if any(len(row) != a.group.rank for row in matrix):
        raise GroupMismatchError("Substitution matrix has the wrong number of columns")
    group = CharacterGroup(len(matrix))
    terms = []
    for chi, c in a.terms.items():
        image = tuple(sum(m * x for m, x in zip(row, chi.free)) for row in matrix)
        terms.append((group.character(image), c))
    return RingElement(group, terms)


def evaluate_at(a: RingElement, point: list[Fraction] | list[int]) -> Fraction:
    """Exact value after substituting nonzero rationals for the torus variables."""
    if not a.group.is_torsion_free:
        raise TorsionUnsupportedError(list(a.group.torsion))
    if len(point) != a.group.rank:
        raise GroupMismatchError("Evaluation point has the wrong length")
    total = Fraction(0)
    for chi, c in a.terms.items():
        value = Fraction(c)
        for p, e in zip(point, chi.free):
            value *= Fraction(p) ** e
        total += value
    return total


def in_z_one_over_r(value: Fraction, r: int) -> bool:
    """True iff the denominator of ``value`` divides a power of r."""
    allowed = set(primefactors(r)) if r > 1 else set()
    return set(primefactors(value.denominator)) <= allowed


def validate_r_coefficients(a: RingElement, r: int) -> RingElement:
    """Check that ``a`` lies in R(G)_{1/r}; returns it unchanged."""
    for coeff in a.terms.values():
        if not in_z_one_over_r(coeff, r):
            raise CoefficientDomainError(str(coeff), r)
    return a
