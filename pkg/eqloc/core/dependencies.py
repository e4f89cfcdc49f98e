"""Command input resolution: inline JSON, file paths and corpus names."""

import json
from pathlib import Path
from typing import Any

from eqloc.core.config import Settings, settings
from eqloc.core.exceptions import MalformedInputError
from eqloc.models.toric import Fan
from eqloc.services.corpus import FANS, corpus_fan
from eqloc.services.toric import parse_fan


class CommandContext:
    """Per-invocation context handed to every command handler."""

    def __init__(self, config: Settings = settings, output_format: str | None = None, run_id: str = ""):
        self.config = config
        self.output_format = output_format or config.DEFAULT_FORMAT
        self.run_id = run_id

    @property
    def as_json(self) -> bool:
        return self.output_format == "json"


def read_json_argument(value: str, field: str) -> Any:
    """Decode ``value`` as inline JSON, or as the contents of the file it names."""
    text = value.strip()
    if not text:
        raise MalformedInputError(f"--{field} is empty", {"field": field})
    if text[0] not in "[{-0123456789":
        path = Path(text)
        if not path.is_file():
            raise MalformedInputError(f"--{field}: no such file '{text}'", {"field": field})
        text = path.read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInputError(
            f"--{field}: invalid JSON: {e.msg}",
            {"field": field, "line": e.lineno, "column": e.colno},
        ) from e


def resolve_fan(value: str, config: Settings = settings) -> Fan:
    """``--fan`` accepts a corpus name (``p2``), a JSON file or inline JSON."""
    name = value.strip()
    if name in FANS:
        return corpus_fan(name, config)
    if name.endswith(".json") and Path(name).name.removesuffix(".json") in FANS and not Path(name).is_file():
        return corpus_fan(Path(name).name.removesuffix(".json"), config)
    return parse_fan(read_json_argument(value, "fan"), config)
