"""Built-in corpus of smooth complete fans and named divisor cases for ``check``."""

import json
from dataclasses import dataclass, field

from eqloc.core.config import Settings, settings
from eqloc.core.exceptions import MalformedInputError
from eqloc.models.toric import Fan
from eqloc.services.toric import parse_fan

FANS: dict[str, str] = {
    "p1": '{"name": "p1", "dim": 1, "rays": [[1], [-1]], "cones": [[0], [1]]}',
    "p2": '{"name": "p2", "dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "cones": [[0, 1], [0, 2], [1, 2]]}',
    "p3": (
        '{"name": "p3", "dim": 3, "rays": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]],'
        ' "cones": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]}'
    ),
    "p1xp1": (
        '{"name": "p1xp1", "dim": 2, "rays": [[1, 0], [-1, 0], [0, 1], [0, -1]],'
        ' "cones": [[0, 2], [0, 3], [1, 2], [1, 3]]}'
    ),
    "f0": '{"name": "f0", "dim": 2, "rays": [[1, 0], [0, 1], [-1, 0], [0, -1]], "cones": [[0, 1], [1, 2], [2, 3], [3, 0]]}',
    "f1": '{"name": "f1", "dim": 2, "rays": [[1, 0], [0, 1], [-1, 1], [0, -1]], "cones": [[0, 1], [1, 2], [2, 3], [3, 0]]}',
    "f2": '{"name": "f2", "dim": 2, "rays": [[1, 0], [0, 1], [-1, 2], [0, -1]], "cones": [[0, 1], [1, 2], [2, 3], [3, 0]]}',
}


@dataclass(frozen=True)
class CorpusCase:
    """A fan from the corpus, a divisor on it and optional mu_n embeddings (n, c)."""

    name: str
    fan: str
    coeffs: tuple[int, ...]
    embeddings: tuple[tuple[int, tuple[int, ...]], ...] = field(default=())


CASES: dict[str, CorpusCase] = {
    case.name: case
    for case in (
        CorpusCase("p1-o0", "p1", (0, 0)),
        CorpusCase("p1-o2", "p1", (0, 2), ((2, (1,)),)),
        CorpusCase("p1-om1", "p1", (0, -1)),
        CorpusCase("p1-om3", "p1", (0, -3)),
        CorpusCase("p2-o1", "p2", (0, 0, 1), ((3, (1, 1)),)),
        CorpusCase("p2-o2", "p2", (0, 0, 2)),
        CorpusCase("p1xp1-o11", "p1xp1", (0, 1, 0, 1), ((2, (1, 1)),)),
        CorpusCase("f0-o11", "f0", (0, 0, 1, 1)),
        CorpusCase("f1-nef", "f1", (0, 0, 1, 1)),
        CorpusCase("f2-nef", "f2", (0, 0, 1, 1)),
        CorpusCase("p3-o1", "p3", (0, 0, 0, 1)),
    )
}


def corpus_fan(name: str, config: Settings = settings) -> Fan:
    if name not in FANS:
        raise MalformedInputError(f"Unknown corpus fan '{name}'", {"field": "fan", "known": sorted(FANS)})
    return parse_fan(json.loads(FANS[name]), config)


def corpus_case(name: str) -> CorpusCase:
    if name not in CASES:
        raise MalformedInputError(f"Unknown corpus case '{name}'", {"field": "case", "known": sorted(CASES)})
    return CASES[name]


def all_cases() -> list[CorpusCase]:
    return list(CASES.values())
