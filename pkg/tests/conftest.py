"""Shared fixtures: corpus fans, torus groups and a seeded random source."""

import random

import pytest

from eqloc.core.config import Settings
from eqloc.models.characters import CharacterGroup
from eqloc.models.toric import Fan
from eqloc.services.corpus import corpus_fan

SEED = 20240101


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


@pytest.fixture
def test_settings() -> Settings:
    return Settings(CHECK_RANDOM_CLASSES=5, MAX_WORKERS=1, DEFAULT_FORMAT="text", LOG_LEVEL="WARNING")


@pytest.fixture
def t1() -> CharacterGroup:
    return CharacterGroup(1)


@pytest.fixture
def t2() -> CharacterGroup:
    return CharacterGroup(2)


@pytest.fixture
def t3() -> CharacterGroup:
    return CharacterGroup(3)


@pytest.fixture
def p1() -> Fan:
    return corpus_fan("p1")


@pytest.fixture
def p2() -> Fan:
    return corpus_fan("p2")


@pytest.fixture
def p3() -> Fan:
    return corpus_fan("p3")


@pytest.fixture
def p1xp1() -> Fan:
    return corpus_fan("p1xp1")


@pytest.fixture
def f1() -> Fan:
    return corpus_fan("f1")


@pytest.fixture(params=["p1", "p2", "p3", "p1xp1", "f0", "f1", "f2"])
def corpus(request: pytest.FixtureRequest) -> Fan:
    return corpus_fan(request.param)
