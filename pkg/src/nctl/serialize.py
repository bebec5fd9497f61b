"""JSON schema validation and CSV helpers for CLI artifacts."""
from __future__ import annotations

import csv
import functools
import io
import json
from importlib import resources

import jsonschema


@functools.lru_cache(maxsize=None)
def load_schema(name: str) -> dict:
    text = resources.files("nctl").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


def validate(name: str, data) -> None:
    """Raise ``jsonschema.ValidationError`` if data does not match the named schema."""
    jsonschema.validate(data, load_schema(name))


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def to_csv(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def from_csv(text: str) -> list[list[str]]:
    return list(csv.reader(io.StringIO(text)))
