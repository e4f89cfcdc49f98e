import itertools
import random
import time
from fractions import Fraction
from math import comb

import pytest

from eqloc.core.config import Settings
from eqloc.core.exceptions import (
    NotInvertibleError,
    NotPolynomialError,
    NotSmoothVertexConeError,
    PrimeNotInvertedError,
    UnboundedPolytopeError,
)
from eqloc.models.characters import CharacterGroup
from eqloc.models.rep_ring import RingElement
from eqloc.services.characters import mu_n_in_torus
from eqloc.services.checks import InvariantChecker
from eqloc.services.corpus import all_cases, corpus_fan
from eqloc.services.localization import frac_add, frac_eq, from_ring, make_fraction, torus_set
from eqloc.services.lrr import (
    apply_inverse_lambda,
    brion_generating_function,
    codiagonal,
    common_denominator,
    concentration_roundtrip,
    count_points,
    decomposition_check,
    euler_characteristic,
    euler_characteristic_of_class,
    oracle_equivalence,
    project_x,
    pushforward_from_x,
    restrict_to_fixed_points,
    self_intersection_check,
    serre_duality_check_p1,
    sum_fractions_exact,
)
from eqloc.services.rep_ring import augmentation, external_product, one_minus, substitute
from eqloc.services.toric import (
    cartier_from_divisor,
    cech_p1_oracle,
    fixed_points,
    is_nef,
    make_polytope,
    points_generating_function,
    polytope_points,
    relabel_fan,
    transform_fan,
)


def poly(group: CharacterGroup, terms: dict[tuple[int, ...], int]) -> RingElement:
    return RingElement.from_terms(group, terms)


def segment(length: int):
    return make_polytope(1, [((1,), 0), ((-1,), length)])


# ==========================================
# Exact summation
# ==========================================


def test_sum_two_point_fractions(t1):
    S = torus_set(t1)
    t = t1.character((1,))
    terms = [make_fraction(RingElement.one(t1), [t], S), make_fraction(RingElement.one(t1), [-t], S)]
    assert sum_fractions_exact(terms) == 1


def test_sum_segment_fractions(t1):
    S = torus_set(t1)
    t = t1.character((1,))
    terms = [
        make_fraction(RingElement.one(t1), [t], S),
        make_fraction(RingElement.monomial(t1.character((2,))), [-t], S),
    ]
    assert sum_fractions_exact(terms) == poly(t1, {(0,): 1, (1,): 1, (2,): 1})


def test_sum_without_denominator(t2):
    a = poly(t2, {(1, -1): 3, (0, 2): -1})
    assert sum_fractions_exact([from_ring(a, torus_set(t2))]) == a


def test_sum_with_non_primitive_factor(t1):
    S = torus_set(t1)
    numerator = poly(t1, {(0,): 1, (4,): -1})
    assert sum_fractions_exact([make_fraction(numerator, [t1.character((2,))], S)]) == poly(t1, {(0,): 1, (2,): 1})


def test_sum_in_two_variables(t2):
    S = torus_set(t2)
    e1, e2 = t2.character((1, 0)), t2.character((0, 1))
    numerator = one_minus(e1) * one_minus(e1 - e2)
    assert sum_fractions_exact([make_fraction(numerator, [e1, e1 - e2], S)]) == 1
    assert sum_fractions_exact([make_fraction(numerator, [-e1, e2 - e1], S)]) == poly(t2, {(2, -1): 1})


def test_sum_that_is_not_a_polynomial(t1):
    S = torus_set(t1)
    with pytest.raises(NotPolynomialError):
        sum_fractions_exact([make_fraction(RingElement.one(t1), [t1.character((1,))], S)])


def test_empty_sum(t2):
    assert sum_fractions_exact([], t2).is_zero


def test_common_denominator_merges_opposite_factors(t2):
    S = torus_set(t2)
    e1, e2 = t2.character((1, 0)), t2.character((0, 1))
    terms = [
        make_fraction(RingElement.one(t2), [e1, e2], S),
        make_fraction(RingElement.monomial(e2), [-e1, e2], S),
        make_fraction(RingElement.one(t2), [e1, e1], S),
    ]
    combined = common_denominator(terms)
    assert sorted(chi.free for chi in combined.denominator) == [(0, 1), (1, 0), (1, 0)]
    total = terms[0]
    for term in terms[1:]:
        total = frac_add(total, term)
    assert frac_eq(combined, total)


def test_not_polynomial_code_survives_euler_characteristic(p1, monkeypatch):
    first_only = fixed_points(p1)[:1]
    monkeypatch.setattr("eqloc.services.lrr.fixed_points", lambda fan, divisor=None: first_only)
    with pytest.raises(NotPolynomialError) as exc:
        euler_characteristic(p1, cartier_from_divisor(p1, [0, 0]))
    assert exc.value.code == "NOT_POLYNOMIAL"


# ==========================================
# Lefschetz-Riemann-Roch
# ==========================================


@pytest.mark.parametrize(
    "fan_name,coeffs,expected",
    [
        ("p1", (0, 2), {(0,): 1, (1,): 1, (2,): 1}),
        ("p2", (0, 0, 1), {(0, 0): 1, (1, 0): 1, (0, 1): 1}),
        ("p1", (0, -1), {}),
        ("p1", (0, 0), {(0,): 1}),
        ("p1xp1", (0, 1, 0, 1), {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}),
    ],
)
def test_euler_characteristic_small_cases(fan_name, coeffs, expected):
    fan = corpus_fan(fan_name)
    result = euler_characteristic(fan, cartier_from_divisor(fan, coeffs))
    assert result == poly(fan.group, expected)


def test_euler_characteristic_renders(p1):
    assert str(euler_characteristic(p1, cartier_from_divisor(p1, [0, 2]))) == "1 + t + t^2"


def oracle_grid():
    for d in range(6):
        yield "p1", (0, d)
    for d in range(5):
        yield "p2", (0, 0, d)
    for a, b in itertools.product(range(4), repeat=2):
        yield "p1xp1", (0, a, 0, b)
    for c3, c4 in itertools.product(range(-1, 4), repeat=2):
        yield "f1", (0, 0, c3, c4)


def test_oracle_equivalence_grid():
    for fan_name, coeffs in oracle_grid():
        fan = corpus_fan(fan_name)
        divisor = cartier_from_divisor(fan, coeffs)
        if not is_nef(divisor):
            continue
        points = polytope_points(divisor)
        chi = euler_characteristic(fan, divisor)
        assert chi == points_generating_function(points, fan.dim), (fan_name, coeffs)
        assert augmentation(chi) == len(points)
        assert oracle_equivalence(fan, divisor)


@pytest.mark.parametrize("n,max_degree", [(1, 5), (2, 4), (3, 2)])
def test_counts_on_projective_space(n, max_degree):
    fan = corpus_fan(f"p{n}")
    for d in range(max_degree + 1):
        chi = euler_characteristic(fan, cartier_from_divisor(fan, [0] * n + [d]))
        assert augmentation(chi) == comb(n + d, n)


@pytest.mark.parametrize("d", [-1, -2, -3, -4, -5])
def test_non_nef_p1_against_cech(p1, d):
    assert euler_characteristic(p1, cartier_from_divisor(p1, [0, d])) == cech_p1_oracle(d)


@pytest.mark.parametrize("coeffs", [(-2, 0), (1, -3), (-4, 1), (3, -6), (0, -2)])
def test_cech_check_follows_the_linearization(p1, test_settings, coeffs):
    divisor = cartier_from_divisor(p1, coeffs)
    shift = p1.group.character(divisor.per_cone_m[0])
    assert euler_characteristic(p1, divisor) == cech_p1_oracle(sum(coeffs)).shift(shift)
    result = InvariantChecker(test_settings).check_oracle(p1, divisor)
    assert result.name == "cech_oracle"
    assert result.passed, result.details


def test_shifted_divisor_on_p1(p1):
    divisor = cartier_from_divisor(p1, [-2, 0])
    assert euler_characteristic(p1, divisor) == -RingElement.monomial(p1.group.character((1,)))


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_serre_duality_on_p1(d):
    assert serre_duality_check_p1(d)


def test_multiplicativity_on_products(p1, p1xp1):
    for a, b in itertools.product(range(-2, 4), repeat=2):
        left = euler_characteristic(p1, cartier_from_divisor(p1, [0, a]))
        right = euler_characteristic(p1, cartier_from_divisor(p1, [0, b]))
        product = euler_characteristic(p1xp1, cartier_from_divisor(p1xp1, [0, a, 0, b]))
        assert product == external_product(left, right)


def test_unimodular_invariance(p2, f1):
    U = [[1, 1], [0, 1]]
    inverse_transpose = [[1, 0], [-1, 1]]
    for fan, coeffs in [(p2, (0, 0, 2)), (p2, (1, -1, 1)), (f1, (0, 0, 1, 1)), (f1, (2, 0, -1, 1))]:
        moved = transform_fan(fan, U)
        before = euler_characteristic(fan, cartier_from_divisor(fan, coeffs))
        after = euler_characteristic(moved, cartier_from_divisor(moved, coeffs))
        assert after == substitute(before, inverse_transpose)


def test_relabelling_does_not_change_the_result(p2):
    ray_order, cone_order = [2, 0, 1], [2, 1, 0]
    relabelled = relabel_fan(p2, ray_order, cone_order)
    coeffs = (1, 0, 2)
    new_coeffs = [coeffs[i] for i in ray_order]
    assert euler_characteristic(relabelled, cartier_from_divisor(relabelled, new_coeffs)) == euler_characteristic(
        p2, cartier_from_divisor(p2, coeffs)
    )


def test_threaded_evaluation_matches_sequential(p3):
    divisor = cartier_from_divisor(p3, [0, 0, 0, 2])
    sequential = euler_characteristic(p3, divisor, config=Settings(MAX_WORKERS=1))
    threaded = euler_characteristic(p3, divisor, config=Settings(MAX_WORKERS=4))
    assert sequential == threaded
    assert augmentation(threaded) == 10


def test_class_combination(p1):
    o1 = cartier_from_divisor(p1, [0, 1])
    o0 = cartier_from_divisor(p1, [0, 0])
    assert euler_characteristic_of_class(p1, [(2, o1), (-1, o0)]) == poly(p1.group, {(0,): 1, (1,): 2})
    t = RingElement.monomial(p1.group.character((1,)))
    assert euler_characteristic_of_class(p1, [(t, o0)]) == t


def test_relative_concentration(p1, p2):
    mu2 = mu_n_in_torus([1], 2)
    divisor = cartier_from_divisor(p1, [0, 2])
    assert euler_characteristic(p1, divisor, subgroup=mu2) == euler_characteristic(p1, divisor)
    assert concentration_roundtrip(p1, divisor, subgroup=mu2)

    mu5 = mu_n_in_torus([1, 2], 5)
    divisor = cartier_from_divisor(p2, [0, 0, 2])
    assert euler_characteristic(p2, divisor, subgroup=mu5) == euler_characteristic(p2, divisor)

    with pytest.raises(NotInvertibleError):
        euler_characteristic(p2, divisor, subgroup=mu_n_in_torus([1, 1], 3))


# ==========================================
# Brion's formula
# ==========================================


def test_brion_segment():
    assert brion_generating_function(segment(2)) == poly(CharacterGroup(1), {(0,): 1, (1,): 1, (2,): 1})
    assert count_points(segment(2)) == 3


def test_brion_square():
    square = make_polytope(2, [((1, 0), 0), ((0, 1), 0), ((-1, 0), 1), ((0, -1), 1)])
    group = CharacterGroup(2)
    one_plus = poly(group, {(0, 0): 1, (1, 0): 1}) * poly(group, {(0, 0): 1, (0, 1): 1})
    assert brion_generating_function(square) == one_plus
    assert count_points(square) == 4


def test_brion_point():
    point = make_polytope(0, [])
    assert brion_generating_function(point) == RingElement.one(CharacterGroup(0))
    assert count_points(point) == 1


def test_brion_matches_oracle_on_corpus_polytopes():
    for fan_name, coeffs in [("p2", (0, 0, 3)), ("p3", (0, 0, 0, 2)), ("f1", (0, 0, 1, 1)), ("f2", (0, 0, 1, 1))]:
        fan = corpus_fan(fan_name)
        divisor = cartier_from_divisor(fan, coeffs)
        polytope = make_polytope(fan.dim, list(zip(fan.rays, divisor.coeffs)))
        points = polytope_points(polytope)
        assert brion_generating_function(polytope) == points_generating_function(points, fan.dim)
        assert count_points(polytope) == len(points)


def test_brion_rejects_singular_vertex():
    triangle = make_polytope(2, [((1, 0), 0), ((0, 1), 0), ((-1, -2), 2)])
    with pytest.raises(NotSmoothVertexConeError):
        brion_generating_function(triangle)


def test_brion_rejects_unbounded_and_empty():
    with pytest.raises(UnboundedPolytopeError):
        brion_generating_function(make_polytope(1, [((1,), 0)]))
    with pytest.raises(UnboundedPolytopeError):
        brion_generating_function(make_polytope(1, [((1,), 0), ((-1,), -1)]))


# ==========================================
# Self-intersection and concentration
# ==========================================


def test_self_intersection_on_p1(p1):
    S = torus_set(p1.group)
    alpha = from_ring(RingElement.one(p1.group), S)
    restricted = project_x(pushforward_from_x(p1, 0, alpha), 0)
    assert frac_eq(restricted, from_ring(one_minus(p1.group.character((1,))), S))
    assert self_intersection_check(p1, 0, alpha)


def test_self_intersection_of_zero(corpus):
    zero = from_ring(RingElement.zero(corpus.group), torus_set(corpus.group))
    for x in range(len(corpus.cones)):
        assert self_intersection_check(corpus, x, zero)


def test_self_intersection_on_p2(p2):
    S = torus_set(p2.group)
    alpha = make_fraction(RingElement.one(p2.group), [p2.group.character((1, 0))], S)
    assert all(self_intersection_check(p2, x, alpha) for x in range(3))


def test_self_intersection_random_classes(corpus, test_settings):
    result = InvariantChecker(test_settings).check_self_intersection(corpus, classes_per_point=10)
    assert result.passed, result.details


@pytest.mark.slow
def test_self_intersection_full(corpus):
    assert InvariantChecker(Settings()).check_self_intersection(corpus, classes_per_point=100).passed


@pytest.mark.parametrize(
    "fan_name,coeffs",
    [("p1", (0, 0)), ("p1", (0, 2)), ("p1xp1", (0, 1, 0, 1)), ("p1", (0, -3)), ("f2", (1, -2, 0, 3))],
)
def test_concentration_small_cases(fan_name, coeffs):
    fan = corpus_fan(fan_name)
    assert concentration_roundtrip(fan, cartier_from_divisor(fan, coeffs))


def test_concentration_sampled_grid(corpus):
    rng = random.Random(len(corpus.rays))
    for _ in range(15):
        coeffs = [rng.randint(-3, 3) for _ in corpus.rays]
        assert concentration_roundtrip(corpus, cartier_from_divisor(corpus, coeffs)), coeffs


@pytest.mark.parametrize("fan_name,factors", [("p1", 1), ("p2", 3), ("p3", 6), ("p1xp1", 2), ("f1", 3)])
def test_codiagonal_keeps_the_merged_denominator(fan_name, factors):
    fan = corpus_fan(fan_name)
    divisor = cartier_from_divisor(fan, [1] + [0] * (len(fan.rays) - 1))
    pushed = codiagonal(apply_inverse_lambda(restrict_to_fixed_points(fan, divisor)))
    assert len(pushed.denominator) == factors
    assert frac_eq(pushed, from_ring(euler_characteristic(fan, divisor), torus_set(fan.group)))


GRID_BUDGET_SECONDS = 30


@pytest.mark.slow
def test_concentration_full_grid(corpus):
    started = time.perf_counter()
    for coeffs in itertools.product(range(-3, 4), repeat=len(corpus.rays)):
        assert concentration_roundtrip(corpus, cartier_from_divisor(corpus, coeffs)), coeffs
    assert time.perf_counter() - started < GRID_BUDGET_SECONDS


# ==========================================
# Decomposition
# ==========================================


def test_decomposition_trivial_stabilizers(p1):
    assert decomposition_check(p1, [], cartier_from_divisor(p1, [0, 2]))


def test_decomposition_p1_mu2(p1):
    assert decomposition_check(p1, [(2, (1,))], cartier_from_divisor(p1, [0, 2]))


def test_decomposition_p2_mu3(p2):
    assert decomposition_check(p2, [(3, (1, 1))], cartier_from_divisor(p2, [0, 0, 1]))


def test_decomposition_needs_inverted_primes(p1):
    with pytest.raises(PrimeNotInvertedError):
        decomposition_check(p1, [(2, (1,))], cartier_from_divisor(p1, [0, 2]), r=3)


def test_corpus_cases_pass(test_settings):
    checker = InvariantChecker(test_settings)
    for case in all_cases():
        results = checker.run_case(case, classes_per_point=2)
        assert all(result.passed for result in results), (case.name, results)


def test_rational_counts_are_exact(p2):
    chi = euler_characteristic(p2, cartier_from_divisor(p2, [0, 0, 2]))
    assert augmentation(chi) == Fraction(6)
