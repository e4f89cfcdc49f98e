"""Lefschetz-Riemann-Roch service: exact fixed-point sums, Brion's formula and the K_0 identities."""

import logging
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import TypeVar

from sympy import QQ
from sympy.polys.rings import PolyRing, ring

from eqloc.core.config import Settings, settings
from eqloc.core.exceptions import (
    InternalError,
    MalformedInputError,
    NotInvertibleError,
    NotPolynomialError,
    NotSmoothVertexConeError,
    SetMismatchError,
    TorsionUnsupportedError,
    UnboundedPolytopeError,
)
from eqloc.models.characters import Character, CharacterGroup, Subgroup
from eqloc.models.localization import LocalizedElement, MultiplicativeSet
from eqloc.models.lrr import LocalizedTuple
from eqloc.models.rep_ring import EquivariantBundleClass, RingElement, Scalar
from eqloc.models.toric import CartierData, Fan, FixedPointDatum, Polytope
from eqloc.services.cyclotomic import compute_r, crt_decompose, crt_reconstruct, restrict_to_mu_n
from eqloc.services.lattice import integer_det, transpose, unimodular_inverse
from eqloc.services.localization import (
    frac_eq,
    frac_mul,
    from_ring,
    invert_lambda,
    is_torus_generator_denominator,
    multiplicative_set,
    torus_set,
)
from eqloc.services.rep_ring import augmentation, dual, lambda_minus_one, one_minus
from eqloc.services.toric import (
    LatticePointOracle,
    cartier_from_divisor,
    cech_p1_oracle,
    ensure_bounded,
    fixed_points,
    is_nef,
    points_generating_function,
    polytope_from_cartier,
    projective_space_fan,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def _fan_out(fn: Callable[[T], R], items: Sequence[T], workers: int) -> list[R]:
    """Map ``fn`` over ``items``, threaded when ``workers > 1``; results keep input order."""
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# ==========================================
# Exact summation of fractions
# ==========================================


def _is_positive(character: Character) -> bool:
    """First nonzero exponent is positive."""
    for e in character.free:
        if e:
            return e > 0
    return False


def _normalize(term: LocalizedElement) -> tuple[RingElement, Counter[Character]]:
    """Rewrite every factor with a positive exponent vector: 1/(1 - t^chi) = -t^-chi / (1 - t^-chi)."""
    numerator = term.numerator
    factors: Counter[Character] = Counter()
    for chi in term.denominator:
        if _is_positive(chi):
            factors[chi] += 1
        else:
            numerator = (-numerator).shift(-chi)
            factors[-chi] += 1
    return numerator, factors


@lru_cache(maxsize=None)
def _polynomial_ring(rank: int) -> PolyRing:
    R, *_ = ring(",".join(f"t{i + 1}" for i in range(rank)), QQ)
    return R


def divide_by_binomials(a: RingElement, characters: Sequence[Character]) -> RingElement:
    """Exact quotient a / prod (1 - t^chi) in the Laurent ring.

    ``a`` is shifted into the polynomial ring by its minimal exponents and each
    binomial becomes t^chi_- - t^chi_+, which has no monomial factor. A Laurent
    quotient then exists iff every polynomial remainder vanishes.
    """
    group = a.group
    if any(chi.is_zero for chi in characters):
        raise NotInvertibleError("1")
    if a.is_zero or not characters:
        return a
    R = _polynomial_ring(group.rank)
    shift = [min(chi.free[i] for chi in a.terms) for i in range(group.rank)]
    current = R.from_dict(
        {
            tuple(e - s for e, s in zip(chi.free, shift)): QQ(c.numerator, c.denominator)
            for chi, c in a.terms.items()
        }
    )
    for character in characters:
        plus = tuple(max(e, 0) for e in character.free)
        minus = tuple(max(-e, 0) for e in character.free)
        current, remainder = current.div(R.from_dict({minus: QQ(1), plus: QQ(-1)}))
        if not remainder.is_zero:
            raise NotPolynomialError(
                f"Numerator is not divisible by 1 - t^{list(character.free)}",
                {"factor": list(character.free), "remainder_terms": len(remainder)},
            )
        shift = [s + m for s, m in zip(shift, minus)]
    return RingElement(
        group,
        [
            (group.character(tuple(e + s for e, s in zip(monom, shift))), Fraction(int(c.numerator), int(c.denominator)))
            for monom, c in current.terms()
        ],
    )


def common_denominator(terms: Sequence[LocalizedElement]) -> LocalizedElement:
    """One fraction equal to the sum of ``terms`` over the smallest normalized denominator.

    Factors 1 - t^chi and 1 - t^-chi are merged and each factor keeps its
    maximal multiplicity across the terms. Needs a torsion-free group.
    """
    if not terms:
        raise MalformedInputError("An empty sum needs an explicit group")
    group = terms[0].group
    S = terms[0].multiplicative_set
    if any(term.multiplicative_set != S for term in terms):
        raise SetMismatchError()
    if not group.is_torsion_free:
        raise TorsionUnsupportedError(list(group.torsion))

    normalized = [_normalize(term) for term in terms]
    common: Counter[Character] = Counter()
    for _, factors in normalized:
        common |= factors

    numerator = RingElement.zero(group)
    for term_numerator, factors in normalized:
        scaled = term_numerator
        for chi in (common - factors).elements():
            scaled = scaled * one_minus(chi)
        numerator = numerator + scaled
    return LocalizedElement(numerator, tuple(common.elements()), S)


def sum_fractions_exact(terms: Sequence[LocalizedElement], group: CharacterGroup | None = None) -> RingElement:
    """Sum of localized fractions whose value lies in the unlocalized ring R(T).

    Terms are brought over the common denominator (each normalized factor at its
    maximal multiplicity) and the numerator is divided by one binomial at a time,
    factors sorted lexicographically. Raises NotPolynomialError otherwise.
    """
    if not terms:
        if group is None:
            raise MalformedInputError("An empty sum needs an explicit group")
        return RingElement.zero(group)
    combined = common_denominator(terms)
    if not is_torus_generator_denominator(combined):
        raise NotInvertibleError("1")
    numerator = combined.numerator
    ordered = list(combined.denominator)
    logger.debug(
        f"[LRR] dividing a {len(numerator)}-term numerator by {len(ordered)} binomial factor(s)",
        extra={"terms": len(terms), "factors": [list(chi.free) for chi in ordered]},
    )
    return divide_by_binomials(numerator, ordered)


# ==========================================
# Lefschetz-Riemann-Roch
# ==========================================


def _set_for(fan: Fan, subgroup: Subgroup | None) -> MultiplicativeSet:
    if subgroup is None:
        return torus_set(fan.group)
    if subgroup.ambient != fan.group:
        raise MalformedInputError("Subgroup must sit inside the fan's torus", {"field": "subgroup"})
    return multiplicative_set(subgroup)


def fixed_point_term(point: FixedPointDatum, fiber: RingElement, S: MultiplicativeSet) -> LocalizedElement:
    """[F_x] / lambda_{-1}(T^v_x) at one fixed point."""
    return frac_mul(from_ring(fiber, S), invert_lambda(EquivariantBundleClass.of(point.cotangent_chars), S))


def euler_characteristic(
    fan: Fan,
    divisor: CartierData,
    subgroup: Subgroup | None = None,
    config: Settings = settings,
) -> RingElement:
    """sum_i (-1)^i [H^i(X, O(D))] as the fixed-point sum of t^m_sigma / prod (1 - t^m_i,sigma).

    With ``subgroup`` the denominators are only inverted in S_H; every
    cotangent character must then be nontrivial on H.
    """
    return euler_characteristic_of_class(fan, [(1, divisor)], subgroup=subgroup, config=config)


def euler_characteristic_of_class(
    fan: Fan,
    combination: Iterable[tuple[RingElement | Scalar, CartierData]],
    subgroup: Subgroup | None = None,
    config: Settings = settings,
) -> RingElement:
    """LRR for sum_k c_k [O(D_k)]: the fiber at x_sigma is sum_k c_k t^m_sigma,k."""
    pieces = list(combination)
    S = _set_for(fan, subgroup)
    group = fan.group
    if any(data.fan != fan for _, data in pieces):
        raise MalformedInputError("Cartier data belongs to a different fan", {"field": "divisor"})
    points = fixed_points(fan)

    def fiber_at(k: int) -> RingElement:
        fiber = RingElement.zero(group)
        for coeff, data in pieces:
            coefficient = coeff if isinstance(coeff, RingElement) else RingElement.constant(group, coeff)
            fiber = fiber + coefficient.shift(group.character(data.per_cone_m[k]))
        return fiber

    terms = _fan_out(
        lambda point: fixed_point_term(point, fiber_at(point.cone), S),
        points,
        config.MAX_WORKERS,
    )
    result = sum_fractions_exact(terms, group)
    logger.info(
        f"[LRR] Euler characteristic on {fan.name or 'fan'}: {result}",
        extra={"fixed_points": len(points), "terms": len(result)},
    )
    return result


# ==========================================
# Brion's formula
# ==========================================


def vertex_cone_terms(polytope: Polytope) -> list[LocalizedElement]:
    """t^v / prod (1 - t^e_j) for every vertex v with edge directions e_j."""
    group = CharacterGroup(polytope.dim)
    S = torus_set(group)
    if not polytope.vertices:
        raise UnboundedPolytopeError("Polytope has no vertices", {"dim": polytope.dim})
    if polytope.dim == 0:
        return [from_ring(RingElement.one(group), S)]
    ensure_bounded(polytope)
    if not polytope.is_lattice:
        raise MalformedInputError("Polytope vertices must be lattice points", {"field": "inequalities"})

    terms = []
    for vertex in polytope.vertices:
        m = tuple(int(c) for c in vertex)
        tight = [normal for normal, a in polytope.inequalities if sum(x * y for x, y in zip(m, normal)) == -a]
        if len(tight) != polytope.dim or abs(integer_det(tight)) != 1:
            raise NotSmoothVertexConeError([str(c) for c in vertex], len(tight))
        edges = [tuple(row) for row in transpose(unimodular_inverse(tight))]
        bundle = EquivariantBundleClass.of(group.character(e) for e in edges)
        terms.append(frac_mul(from_ring(RingElement.monomial(group.character(m)), S), invert_lambda(bundle, S)))
    return terms


def brion_generating_function(polytope: Polytope) -> RingElement:
    """sum_{m in P cap M} t^m from the vertex cones."""
    result = sum_fractions_exact(vertex_cone_terms(polytope), CharacterGroup(polytope.dim))
    logger.debug(f"[BRION] {len(polytope.vertices)} vertices, {len(result)} lattice points")
    return result


def count_points(polytope: Polytope) -> int:
    """|P cap M|: augmentation applied after exact summation."""
    count = augmentation(brion_generating_function(polytope))
    if count.denominator != 1:
        raise InternalError("Point count is not an integer", {"count": str(count)})
    return int(count)


# ==========================================
# Fixed-point restriction model
# ==========================================


def restrict_to_fixed_points(fan: Fan, divisor: CartierData, S: MultiplicativeSet | None = None) -> LocalizedTuple:
    """[O(D)] as the tuple (t^m_sigma)_sigma."""
    S = S or torus_set(fan.group)
    group = fan.group
    entries = tuple(from_ring(RingElement.monomial(group.character(m)), S) for m in divisor.per_cone_m)
    return LocalizedTuple(fan=fan, entries=entries)


def apply_inverse_lambda(classes: LocalizedTuple) -> LocalizedTuple:
    """Entry-wise (lambda_{-1}(T^v_x) . -)^{-1}."""
    S = classes.multiplicative_set
    points = fixed_points(classes.fan)
    entries = tuple(
        frac_mul(entry, invert_lambda(EquivariantBundleClass.of(point.cotangent_chars), S))
        for entry, point in zip(classes.entries, points)
    )
    return LocalizedTuple(fan=classes.fan, entries=entries)


def codiagonal(classes: LocalizedTuple) -> LocalizedElement:
    """Push the fixed-point tuple to a point: the sum of its entries over their merged denominator."""
    return common_denominator(classes.entries)


def pushforward_from_x(fan: Fan, x: int, alpha: LocalizedElement) -> LocalizedTuple:
    """iota_*(alpha) for the fixed point x: lambda_{-1}(T^v_x) alpha at x, zero elsewhere."""
    if not 0 <= x < len(fan.cones):
        raise MalformedInputError(f"Fixed point {x} does not exist", {"field": "x"})
    S = alpha.multiplicative_set
    point = fixed_points(fan)[x]
    lam = lambda_minus_one(EquivariantBundleClass.of(point.cotangent_chars), fan.group)
    zero = from_ring(RingElement.zero(fan.group), S)
    entries = tuple(frac_mul(from_ring(lam, S), alpha) if k == x else zero for k in range(len(fan.cones)))
    return LocalizedTuple(fan=fan, entries=entries)


def project_x(classes: LocalizedTuple, x: int) -> LocalizedElement:
    """iota^*: restriction to the fixed point x."""
    return classes.entries[x]


def self_intersection_check(fan: Fan, x: int, alpha: LocalizedElement) -> bool:
    """iota^* iota_*(alpha) == lambda_{-1}(N) alpha with N = T^v_x."""
    left = project_x(pushforward_from_x(fan, x, alpha), x)
    point = fixed_points(fan)[x]
    lam = lambda_minus_one(EquivariantBundleClass.of(point.cotangent_chars), fan.group)
    right = LocalizedElement(lam * alpha.numerator, alpha.denominator, alpha.multiplicative_set)
    return frac_eq(left, right)


def concentration_roundtrip(fan: Fan, divisor: CartierData, subgroup: Subgroup | None = None) -> bool:
    """Restrict, invert lambda_{-1}, push to a point; compare with the Euler characteristic."""
    S = _set_for(fan, subgroup)
    pushed = codiagonal(apply_inverse_lambda(restrict_to_fixed_points(fan, divisor, S)))
    expected = from_ring(euler_characteristic(fan, divisor, subgroup=subgroup), S)
    passed = frac_eq(pushed, expected)
    if not passed:
        logger.warning(f"[LRR] concentration round-trip failed on {fan.name or 'fan'}", extra={"coeffs": divisor.coeffs})
    return passed


def decomposition_check(
    fan: Fan,
    embeddings: Sequence[tuple[int, Sequence[int]]],
    divisor: CartierData,
    r: int | None = None,
) -> bool:
    """Restrict chi(O(D)) to each mu_n, split over the Phi_d and reconstruct."""
    if not embeddings:
        embeddings = [(1, (0,) * fan.dim)]
    r = r if r is not None else compute_r(n for n, _ in embeddings)
    chi = euler_characteristic(fan, divisor)
    passed = True
    for n, c in embeddings:
        image = restrict_to_mu_n(chi, list(c), n, r)
        components = crt_decompose(image)
        rebuilt = crt_reconstruct(components)
        logger.debug(
            f"[CRT] mu_{n} via {list(c)}: {image} -> {[str(comp) for comp in components]}",
            extra={"n": n, "r": r},
        )
        if rebuilt != image:
            logger.warning(f"[CRT] reconstruction failed for mu_{n}", extra={"embedding": list(c)})
            passed = False
    return passed


# ==========================================
# Reusable invariant checks
# ==========================================


def oracle_equivalence(fan: Fan, divisor: CartierData, config: Settings = settings) -> bool:
    """LRR against lattice-point enumeration of P_D (nef divisors only)."""
    if not is_nef(divisor):
        raise MalformedInputError("The lattice-point oracle needs a nef divisor", {"coeffs": list(divisor.coeffs)})
    oracle = points_generating_function(LatticePointOracle(config).points(polytope_from_cartier(divisor)), fan.dim)
    return euler_characteristic(fan, divisor, config=config) == oracle


def serre_duality_check_p1(d: int) -> bool:
    """chi(O(-d-2))(t) == -t^-1 chi(O(d))(t^-1) on P^1, both sides against the Cech oracle."""
    p1 = projective_space_fan(1)
    group = p1.group
    positive = euler_characteristic(p1, cartier_from_divisor(p1, [0, d]))
    negative = euler_characteristic(p1, cartier_from_divisor(p1, [0, -d - 2]))
    twisted = -dual(positive).shift(group.character((-1,)))
    return negative == twisted and positive == cech_p1_oracle(d) and negative == cech_p1_oracle(-d - 2)
