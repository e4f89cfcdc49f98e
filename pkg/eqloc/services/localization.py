"""Localization service: fractions over S_H^{-1} R(G) and inversion of lambda_{-1}."""

import logging
from fractions import Fraction

from eqloc.core.exceptions import (
    GroupMismatchError,
    NotInvertibleError,
    SetMismatchError,
    TorsionUnsupportedError,
)
from eqloc.models.characters import Character, CharacterGroup, Subgroup
from eqloc.models.localization import LocalizedElement, MultiplicativeSet
from eqloc.models.rep_ring import EquivariantBundleClass, RingElement, render_monomial
from eqloc.services.characters import is_nontrivial_on, whole_group
from eqloc.services.rep_ring import evaluate_at, one_minus

logger = logging.getLogger(__name__)


def multiplicative_set(subgroup: Subgroup) -> MultiplicativeSet:
    return MultiplicativeSet(group=subgroup.ambient, subgroup=subgroup)


def torus_set(group: CharacterGroup) -> MultiplicativeSet:
    """S_G with H = G: every nonzero character is an inverted generator."""
    return multiplicative_set(whole_group(group))


def is_generator(character: Character, S: MultiplicativeSet) -> bool:
    """1 - t^chi is a generator of S_H."""
    return is_nontrivial_on(character, S.subgroup)


def make_fraction(
    numerator: RingElement,
    denominator: list[Character] | tuple[Character, ...],
    S: MultiplicativeSet,
) -> LocalizedElement:
    """Build numerator / prod (1 - t^chi), checking every factor lies in S."""
    if numerator.group != S.group:
        raise GroupMismatchError("Numerator does not live in the localized ring's group")
    for chi in denominator:
        if not is_generator(chi, S):
            raise NotInvertibleError(render_monomial(chi) or "1")
    return LocalizedElement(numerator=numerator, denominator=tuple(denominator), multiplicative_set=S)


def from_ring(a: RingElement, S: MultiplicativeSet) -> LocalizedElement:
    return make_fraction(a, (), S)


def _check_compatible(a: LocalizedElement, b: LocalizedElement) -> None:
    if a.group != b.group:
        raise GroupMismatchError(
            "Fractions belong to different groups",
            {"left": a.group.describe(), "right": b.group.describe()},
        )
    if a.multiplicative_set != b.multiplicative_set:
        raise SetMismatchError()


def denominator_product(a: LocalizedElement) -> RingElement:
    result = RingElement.one(a.group)
    for chi in a.denominator:
        result = result * one_minus(chi)
    return result


def frac_add(a: LocalizedElement, b: LocalizedElement) -> LocalizedElement:
    """a/s + b/u = (a u + b s) / (s u); no reduction."""
    _check_compatible(a, b)
    numerator = a.numerator * denominator_product(b) + b.numerator * denominator_product(a)
    return LocalizedElement(numerator, a.denominator + b.denominator, a.multiplicative_set)


def frac_mul(a: LocalizedElement, b: LocalizedElement) -> LocalizedElement:
    _check_compatible(a, b)
    return LocalizedElement(a.numerator * b.numerator, a.denominator + b.denominator, a.multiplicative_set)


def frac_neg(a: LocalizedElement) -> LocalizedElement:
    return LocalizedElement(-a.numerator, a.denominator, a.multiplicative_set)


def frac_sub(a: LocalizedElement, b: LocalizedElement) -> LocalizedElement:
    return frac_add(a, frac_neg(b))


def frac_eq(a: LocalizedElement, b: LocalizedElement) -> bool:
    """Cross-multiplication test; valid only when Z[G^v] is a domain."""
    _check_compatible(a, b)
    if not a.group.is_torsion_free:
        raise TorsionUnsupportedError(list(a.group.torsion))
    return a.numerator * denominator_product(b) == b.numerator * denominator_product(a)


def invert_lambda(bundle: EquivariantBundleClass, S: MultiplicativeSet) -> LocalizedElement:
    """(lambda_{-1}(N) . -)^{-1} applied to 1: the fraction 1 / prod (1 - t^chi_i)."""
    for chi in bundle.characters:
        if not is_generator(chi, S):
            logger.debug(f"[LOCALIZATION] {chi} restricts trivially to {S.subgroup.label or 'H'}")
            raise NotInvertibleError(render_monomial(chi) or "1")
    return LocalizedElement(RingElement.one(S.group), bundle.characters, S)


def evaluate_fraction(a: LocalizedElement, point: list[int] | list[Fraction]) -> Fraction:
    """Exact value at t_i = point_i; choose distinct primes to stay off the poles."""
    denominator = evaluate_at(denominator_product(a), point)
    return evaluate_at(a.numerator, point) / denominator


def is_torus_generator_denominator(a: LocalizedElement) -> bool:
    """Every denominator factor is 1 - t^chi with chi != 0."""
    return all(not chi.is_zero for chi in a.denominator)
