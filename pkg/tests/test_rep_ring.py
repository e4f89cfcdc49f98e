from fractions import Fraction

import pytest

from eqloc.core.exceptions import CoefficientDomainError, GroupMismatchError
from eqloc.models.characters import CharacterGroup
from eqloc.models.rep_ring import EquivariantBundleClass, RingElement
from eqloc.services.rep_ring import (
    augmentation,
    dual,
    elementary_symmetric_expansion,
    evaluate_at,
    external_product,
    lambda_minus_one,
    one_minus,
    render,
    ring_add,
    substitute,
    validate_r_coefficients,
)


def poly(group: CharacterGroup, terms: dict[tuple[int, ...], int | Fraction]) -> RingElement:
    return RingElement.from_terms(group, terms)


def test_render_graded_order(t2):
    assert render(poly(t2, {(0, 0): 1, (1, 0): 1, (0, 1): 1})) == "1 + t1 + t2"
    assert render(poly(t2, {(1, -1): 1, (1, 0): -1, (0, 0): 1})) == "1 - t1 + t1*t2^-1"


def test_render_rank_one_and_zero(t1):
    assert str(poly(t1, {(2,): 1, (0,): 1, (1,): 1})) == "1 + t + t^2"
    assert str(RingElement.zero(t1)) == "0"
    assert str(poly(t1, {(-1,): Fraction(-1, 2)})) == "-1/2*t^-1"


def test_render_torsion():
    group = CharacterGroup(0, (5,))
    assert str(RingElement.monomial(group.character((), (3,)))) == "u^3"


def test_torsion_relation_holds():
    group = CharacterGroup(0, (3,))
    u = RingElement.monomial(group.character((), (1,)))
    assert u**3 == RingElement.one(group)
    assert u**3 == 1


def test_zero_coefficients_are_dropped(t1):
    a = poly(t1, {(1,): 1}) - poly(t1, {(1,): 1})
    assert a.is_zero
    assert len(a) == 0


def test_group_mismatch(t1, t2):
    with pytest.raises(GroupMismatchError):
        ring_add(RingElement.one(t1), RingElement.one(t2))
    with pytest.raises(GroupMismatchError):
        RingElement.one(t1) * RingElement.one(t2)


def test_lambda_of_empty_bundle_needs_group(t1):
    assert lambda_minus_one(EquivariantBundleClass(()), t1) == 1
    with pytest.raises(GroupMismatchError):
        lambda_minus_one(EquivariantBundleClass(()))


def test_lambda_of_single_character(t1):
    chi = t1.character((3,))
    assert lambda_minus_one(EquivariantBundleClass.of([chi])) == one_minus(chi)


def random_bundle(rng, group, size):
    return EquivariantBundleClass.of(
        group.character(tuple(rng.randint(-2, 2) for _ in range(group.rank))) for _ in range(size)
    )


def test_lambda_definitions_agree(rng, t3):
    for size in range(7):
        for _ in range(15):
            bundle = random_bundle(rng, t3, size)
            assert lambda_minus_one(bundle, t3) == elementary_symmetric_expansion(bundle, t3)


def test_lambda_on_torsion_group(rng):
    group = CharacterGroup(1, (4,))
    for _ in range(20):
        bundle = EquivariantBundleClass.of(
            group.character((rng.randint(-2, 2),), (rng.randint(0, 3),)) for _ in range(rng.randint(0, 4))
        )
        assert lambda_minus_one(bundle, group) == elementary_symmetric_expansion(bundle, group)


def test_whitney_multiplicativity(rng, t3):
    for _ in range(1000):
        left = random_bundle(rng, t3, rng.randint(0, 3))
        right = random_bundle(rng, t3, rng.randint(0, 3))
        assert lambda_minus_one(left + right, t3) == lambda_minus_one(left, t3) * lambda_minus_one(right, t3)


def test_augmentation(rng, t2):
    assert augmentation(poly(t2, {(0, 0): 1, (1, 0): 2, (3, -1): Fraction(1, 2)})) == Fraction(7, 2)
    bundle = random_bundle(rng, t2, 3)
    assert augmentation(lambda_minus_one(bundle, t2)) == 0


def test_dual_and_substitute(t2):
    a = poly(t2, {(1, 0): 1, (0, -2): 3})
    assert dual(a) == poly(t2, {(-1, 0): 1, (0, 2): 3})
    assert substitute(a, [[1, 1], [0, 1]]) == poly(t2, {(1, 0): 1, (-2, -2): 3})
    assert substitute(a, [[1, 1]]) == poly(CharacterGroup(1), {(1,): 1, (-2,): 3})


def test_external_product(t1, t2):
    a = poly(t1, {(0,): 1, (1,): 1})
    expected = poly(t2, {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1})
    assert external_product(a, a) == expected


def test_evaluate_at(t2):
    a = poly(t2, {(1, -1): 2, (0, 0): -1})
    assert evaluate_at(a, [3, 2]) == Fraction(2)
    assert evaluate_at(a, [Fraction(1, 2), 5]) == Fraction(-4, 5)


def test_validate_r_coefficients(t1):
    a = poly(t1, {(1,): Fraction(1, 4), (0,): Fraction(5, 2)})
    assert validate_r_coefficients(a, 2) is a
    assert validate_r_coefficients(a, 6) is a
    with pytest.raises(CoefficientDomainError):
        validate_r_coefficients(a, 3)


# ==========================================
# Ring axioms
# ==========================================


GROUP_SHAPES = [(2, ()), (1, (4,)), (0, (12,)), (0, (2, 6)), (3, ()), (1, (3, 5))]


def random_element(rng, group: CharacterGroup) -> RingElement:
    terms = []
    for _ in range(rng.randint(0, 3)):
        chi = group.character(
            tuple(rng.randint(-2, 2) for _ in range(group.rank)),
            tuple(rng.randint(0, n - 1) for n in group.torsion),
        )
        terms.append((chi, Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2, 3]))))
    return RingElement(group, terms)


@pytest.mark.parametrize("rank,torsion", GROUP_SHAPES)
def test_ring_axioms(rng, rank, torsion):
    group = CharacterGroup(rank, torsion)
    one, zero = RingElement.one(group), RingElement.zero(group)
    for _ in range(1000):
        a, b, c = (random_element(rng, group) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a * one == a
        assert a + zero == a
        assert (a + (-a)).is_zero


@pytest.mark.parametrize("rank,torsion", GROUP_SHAPES)
def test_augmentation_is_a_ring_map(rng, rank, torsion):
    group = CharacterGroup(rank, torsion)
    assert augmentation(RingElement.one(group)) == 1
    for _ in range(1000):
        a, b = random_element(rng, group), random_element(rng, group)
        assert augmentation(a * b) == augmentation(a) * augmentation(b)
        assert augmentation(a + b) == augmentation(a) + augmentation(b)


def test_zero_divisors_in_a_torsion_group_ring():
    group = CharacterGroup(0, (2,))
    u = RingElement.monomial(group.character((), (1,)))
    left, right = 1 - u, 1 + u
    assert not left.is_zero and not right.is_zero
    assert (left * right).is_zero
