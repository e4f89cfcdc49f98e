from fractions import Fraction

import pytest

from eqloc.core.exceptions import InvalidSubgroupError, MalformedInputError, NotInvertibleError
from eqloc.models.characters import CharacterGroup
from eqloc.models.rep_ring import RingElement
from eqloc.schemas.characters import SubgroupSchema
from eqloc.schemas.common import load_schema
from eqloc.schemas.localization import LocalizedElementSchema
from eqloc.schemas.rep_ring import RingElementSchema
from eqloc.schemas.toric import FanSchema, PolytopeSchema
from eqloc.services.characters import mu_n_in_torus
from eqloc.services.localization import frac_eq, make_fraction, multiplicative_set, torus_set
from eqloc.services.toric import make_polytope, parse_fan


def test_ring_element_terms(t2):
    element = load_schema(
        RingElementSchema,
        {"terms": [{"coeff": "-1/2", "free": [1, 0]}, {"coeff": 3, "free": [0, -1]}]},
    ).to_model()
    assert element == RingElement.from_terms(t2, {(1, 0): Fraction(-1, 2), (0, -1): 3})

    schema = RingElementSchema.from_model(element)
    assert schema.text == str(element)
    assert [term.coeff for term in schema.terms] == ["3", "-1/2"]


def test_ring_element_with_torsion():
    payload = {"group": {"rank": 0, "torsion": [4]}, "terms": [{"coeff": 1, "tors": [5]}]}
    element = load_schema(RingElementSchema, payload).to_model()
    assert str(element) == "u"


def test_ring_element_rejects_bad_input():
    with pytest.raises(MalformedInputError):
        load_schema(RingElementSchema, {"terms": []}).to_model()
    with pytest.raises(MalformedInputError):
        load_schema(RingElementSchema, {"terms": [{"coeff": "one", "free": [1]}]}).to_model()
    with pytest.raises(MalformedInputError):
        load_schema(RingElementSchema, {"terms": [{"coeff": 1, "free": [1]}, {"coeff": 1, "free": [1, 2]}]}).to_model()
    assert load_schema(RingElementSchema, {"group": {"rank": 2}, "terms": []}).to_model().is_zero


def test_subgroup_round_trip():
    mu5 = mu_n_in_torus([1, 2], 5)
    assert SubgroupSchema.from_model(mu5).to_model() == mu5


def test_subgroup_must_be_surjective():
    payload = {
        "ambient": {"rank": 1},
        "target": {"rank": 0, "torsion": [4]},
        "matrix": [[2]],
    }
    with pytest.raises(InvalidSubgroupError):
        load_schema(SubgroupSchema, payload).to_model()


def test_localized_element_round_trip(t2):
    S = torus_set(t2)
    element = make_fraction(RingElement.from_terms(t2, {(1, 0): 2, (0, 0): -1}), [t2.character((1, 1))], S)
    restored = LocalizedElementSchema.from_model(element).to_model(S)
    assert frac_eq(element, restored)


def test_localized_element_checks_the_set(t1):
    S = multiplicative_set(mu_n_in_torus([1], 2))
    payload = {"num": {"terms": [{"coeff": 1, "free": [0]}]}, "den": [{"free": [2]}]}
    with pytest.raises(NotInvertibleError):
        load_schema(LocalizedElementSchema, payload).to_model(S)
    element = load_schema(LocalizedElementSchema, {**payload, "den": [{"free": [1]}]}).to_model(S)
    assert element.group == CharacterGroup(1)


def test_fan_schema_round_trip(p2):
    assert parse_fan(FanSchema.from_model(p2).model_dump()) == p2


def test_polytope_schema():
    square = make_polytope(2, [((1, 0), 0), ((0, 1), 0), ((-1, 0), 1), ((0, -1), 1)])
    schema = PolytopeSchema.from_model(square)
    assert make_polytope(schema.dim, [(i.normal, i.offset) for i in schema.inequalities]) == square
    with pytest.raises(MalformedInputError) as exc:
        load_schema(PolytopeSchema, {"dim": 2, "inequalities": [{"normal": [1], "offset": 0}]})
    assert exc.value.details["errors"] == 1
