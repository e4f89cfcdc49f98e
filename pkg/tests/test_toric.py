import itertools
from fractions import Fraction

import pytest

from eqloc.core.config import Settings
from eqloc.core.exceptions import (
    InconsistentDataError,
    MalformedInputError,
    NotCompleteError,
    NotPrimitiveError,
    NotSmoothError,
    OracleTooLargeError,
    UnboundedPolytopeError,
)
from eqloc.models.characters import CharacterGroup
from eqloc.models.rep_ring import RingElement
from eqloc.models.toric import CartierData
from eqloc.services.corpus import FANS, corpus_fan
from eqloc.services.toric import (
    cartier_from_divisor,
    cech_p1_oracle,
    dual_basis,
    fixed_points,
    hirzebruch_fan,
    is_nef,
    make_fan,
    make_polytope,
    parse_fan,
    polytope_points,
    polytope_vertices,
    product_fan,
    projective_space_fan,
    recession_direction,
    transform_fan,
    validate_cartier,
)


@pytest.mark.parametrize("name,fixed", [("p1", 2), ("p2", 3), ("p3", 4), ("p1xp1", 4), ("f0", 4), ("f1", 4), ("f2", 4)])
def test_corpus_fans_validate(name, fixed):
    fan = corpus_fan(name)
    assert len(fixed_points(fan)) == fixed
    assert fan.name == name


def test_standard_constructions_match_corpus(p1, p2, p3, p1xp1, f1):
    assert projective_space_fan(1) == p1
    assert projective_space_fan(2) == p2
    assert projective_space_fan(3) == p3
    assert product_fan(p1, p1) == p1xp1
    assert hirzebruch_fan(1) == f1


def test_not_primitive():
    with pytest.raises(NotPrimitiveError):
        make_fan(1, [[2], [-1]], [[0], [1]])


def test_not_smooth():
    with pytest.raises(NotSmoothError) as exc:
        make_fan(2, [[1, 0], [0, 1], [-1, -2]], [[0, 1], [1, 2], [2, 0]])
    assert exc.value.details["cone"] == 2


def test_not_complete():
    with pytest.raises(NotCompleteError):
        make_fan(2, [[1, 0], [0, 1], [-1, -1]], [[0, 1], [1, 2]])


def test_overlapping_cones_are_not_a_fan():
    # Both cones lie in the upper half plane and share the facet spanned by (1, 0).
    with pytest.raises(NotCompleteError):
        make_fan(2, [[1, 0], [0, 1], [1, 1]], [[0, 1], [0, 2]])


def test_malformed_fan_json():
    with pytest.raises(MalformedInputError) as exc:
        parse_fan('{"dim": 1,\n "rays": [[1], [-1]],')
    assert exc.value.details["line"] == 2
    with pytest.raises(MalformedInputError) as exc:
        parse_fan({"dim": 2, "rays": [[1, 0], [0, 1, 3]], "cones": [[0, 1]]})
    assert exc.value.details["field"] == "rays[1]"
    with pytest.raises(MalformedInputError):
        parse_fan({"dim": 1, "rays": [[1]], "cones": [[0]], "colour": "red"})


def test_corpus_json_is_well_formed():
    for name in FANS:
        assert parse_fan(FANS[name]) == corpus_fan(name)


def test_dual_basis(p2):
    assert dual_basis(p2, 1) == [(1, -1), (0, -1)]


def test_cotangent_characters_pair_to_the_identity(corpus):
    for k, point in enumerate(fixed_points(corpus)):
        rays = corpus.cone_rays(k)
        assert [chi.free for chi in point.cotangent_chars] == dual_basis(corpus, k)
        for i, chi in enumerate(point.cotangent_chars):
            for j, ray in enumerate(rays):
                assert sum(x * y for x, y in zip(chi.free, ray)) == (1 if i == j else 0), (corpus.name, k, i, j)


def test_nef_vertices_are_the_local_characters(corpus):
    checked = 0
    for coeffs in itertools.product(range(0, 3), repeat=len(corpus.rays)):
        data = cartier_from_divisor(corpus, coeffs)
        if not is_nef(data):
            continue
        checked += 1
        vertices = polytope_vertices(corpus.dim, list(zip(corpus.rays, data.coeffs)))
        local = {tuple(Fraction(x) for x in m) for m in data.per_cone_m}
        assert set(vertices) == local, coeffs
    assert checked > 0


def test_cartier_data_on_p1(p1):
    data = cartier_from_divisor(p1, [0, 2])
    assert data.per_cone_m == ((0,), (2,))
    assert is_nef(data)
    assert not is_nef(cartier_from_divisor(p1, [0, -1]))


def test_fixed_points_on_p1(p1):
    points = fixed_points(p1, cartier_from_divisor(p1, [0, 3]))
    assert [tuple(chi.free for chi in pt.cotangent_chars) for pt in points] == [((1,),), ((-1,),)]
    assert [pt.fiber_char.free for pt in points] == [(0,), (3,)]


def test_inconsistent_cartier_data(p1):
    with pytest.raises(InconsistentDataError):
        validate_cartier(CartierData(fan=p1, coeffs=(0, 2), per_cone_m=((0,), (1,))))


def test_wrong_number_of_coefficients(p2):
    with pytest.raises(MalformedInputError):
        cartier_from_divisor(p2, [0, 1])


def test_nef_on_hirzebruch(f1):
    assert is_nef(cartier_from_divisor(f1, [0, 0, 1, 1]))
    assert is_nef(cartier_from_divisor(f1, [0, 0, 0, 2]))
    assert not is_nef(cartier_from_divisor(f1, [0, 0, -1, 1]))


def test_polytope_points_lexicographic(p2):
    assert polytope_points(cartier_from_divisor(p2, [0, 0, 1])) == [(0, 0), (0, 1), (1, 0)]


def test_polytope_vertices_of_square():
    vertices = polytope_vertices(2, [((1, 0), 0), ((0, 1), 0), ((-1, 0), 1), ((0, -1), 1)])
    assert vertices == tuple((Fraction(x), Fraction(y)) for x, y in [(0, 0), (0, 1), (1, 0), (1, 1)])


def test_point_polytope():
    point = make_polytope(0, [])
    assert point.vertices == ((),)
    assert polytope_points(point) == [()]


def test_oracle_cap(p1):
    with pytest.raises(OracleTooLargeError):
        polytope_points(cartier_from_divisor(p1, [0, 20]), Settings(ORACLE_MAX_POINTS=10))


def test_oracle_rejects_unbounded_polyhedra():
    with pytest.raises(UnboundedPolytopeError):
        polytope_points(make_polytope(1, [((1,), 0)]))
    with pytest.raises(UnboundedPolytopeError):
        polytope_points(make_polytope(2, [((1, 0), 0), ((0, 1), 0)]))
    with pytest.raises(UnboundedPolytopeError):
        polytope_points(make_polytope(2, [((1, 0), 0), ((-1, 0), 2)]))


def test_recession_direction():
    quadrant = make_polytope(2, [((1, 0), 0), ((0, 1), 0), ((1, 1), -1)])
    direction = recession_direction(quadrant)
    assert direction is not None
    assert all(sum(x * y for x, y in zip(direction, v)) >= 0 for v, _ in quadrant.inequalities)
    square = make_polytope(2, [((1, 0), 0), ((0, 1), 0), ((-1, 0), 1), ((0, -1), 1)])
    assert recession_direction(square) is None


def test_empty_polytope_has_no_points():
    empty = make_polytope(1, [((1,), 0), ((-1,), -1)])
    assert empty.vertices == ()
    assert polytope_points(empty) == []


@pytest.mark.parametrize("d", [0, 1, 2, -1, -2, -3])
def test_cech_oracle(d):
    group = CharacterGroup(1)
    expected = RingElement(
        group,
        [(group.character((k,)), 1) for k in range(0, d + 1)] + [(group.character((k,)), -1) for k in range(d + 1, 0)],
    )
    assert cech_p1_oracle(d) == expected
    if d == -3:
        assert str(cech_p1_oracle(d)) == "-t^-1 - t^-2"


def test_transform_fan_requires_unimodular(p2):
    with pytest.raises(MalformedInputError):
        transform_fan(p2, [[2, 0], [0, 1]])
    sheared = transform_fan(p2, [[1, 1], [0, 1]])
    assert sheared.rays == ((1, 0), (1, 1), (-2, -1))
