"""Round-trip-safe serialization of complex values and reports.

Complex numbers serialize to ``{"re": x, "im": y}`` objects in JSON and
to a pair of ``%.17g`` columns in CSV, so every finite double survives a
write/read cycle exactly.  JSON documents are written with sorted keys
and a trailing newline, which keeps repeated runs byte-identical.
"""

from __future__ import annotations

import dataclasses
import json
from enum import Enum
from typing import Any, IO, Sequence

#: Shortest text that reparses to the identical double.
FLOAT_FORMAT = "%.17g"


def format_float(value: float) -> str:
    return FLOAT_FORMAT % value


def complex_to_json(value: complex) -> dict[str, float]:
    return {"re": value.real, "im": value.imag}


def parse_complex(raw: Any) -> complex:
    """Parse a complex number from any accepted config spelling.

    Accepts a number, an ``{"re": x, "im": y}`` object (either key may
    be omitted), a two-element ``[re, im]`` list, or a string such as
    ``"1+2i"`` or ``"0.5-0.25j"``.
    """
    if isinstance(raw, bool):
        raise ValueError(f"not a complex number: {raw!r}")
    if isinstance(raw, (int, float)):
        return complex(raw, 0.0)
    if isinstance(raw, complex):
        return raw
    if isinstance(raw, dict):
        extra = set(raw) - {"re", "im"}
        if extra:
            raise ValueError(f"unexpected keys in complex object: {sorted(extra)}")
        re = raw.get("re", 0.0)
        im = raw.get("im", 0.0)
        if isinstance(re, bool) or isinstance(im, bool) or not isinstance(re, (int, float)) or not isinstance(im, (int, float)):
            raise ValueError(f"complex object fields must be numbers: {raw!r}")
        return complex(re, im)
    if isinstance(raw, (list, tuple)):
        if len(raw) != 2:
            raise ValueError(f"complex list must have exactly two entries: {raw!r}")
        re, im = raw
        if isinstance(re, bool) or isinstance(im, bool) or not isinstance(re, (int, float)) or not isinstance(im, (int, float)):
            raise ValueError(f"complex list entries must be numbers: {raw!r}")
        return complex(re, im)
    if isinstance(raw, str):
        text = raw.strip().replace(" ", "")
        if not text:
            raise ValueError("empty complex string")
        # Accept the mathematical spelling with i as well as Python's j.
        text = text.replace("i", "j").replace("J", "j")
        try:
            return complex(text)
        except ValueError as exc:
            raise ValueError(f"cannot parse complex string {raw!r}") from exc
    raise ValueError(f"cannot parse complex value of type {type(raw).__name__}")


def _jsonable(value: Any) -> Any:
    """Recursively convert values to JSON-encodable structures."""
    if isinstance(value, complex):
        return complex_to_json(value)
    if isinstance(value, Enum):
        return value.value
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {
            field.name: _jsonable(getattr(value, field.name))
            for field in dataclasses.fields(value)
        }
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if isinstance(value, float):
        if value != value:
            return "nan"
        if value == float("inf"):
            return "inf"
        if value == float("-inf"):
            return "-inf"
    return value


def dump_json(document: Any, stream: IO[str]) -> None:
    """Write a document as deterministic JSON (sorted keys, newline)."""
    json.dump(_jsonable(document), stream, indent=2, sort_keys=True, allow_nan=False)
    stream.write("\n")


def dumps_json(document: Any) -> str:
    return (
        json.dumps(_jsonable(document), indent=2, sort_keys=True, allow_nan=False)
        + "\n"
    )


def write_csv(
    stream: IO[str],
    header: Sequence[str],
    rows: Sequence[Sequence[Any]],
) -> None:
    """Write rows as comma-delimited text with %.17g floats.

    Values may be int, float, complex (expands to nothing: callers
    split complex into explicit columns), or str; floats use the
    round-trip format.
    """
    stream.write(",".join(header) + "\n")
    for row in rows:
        cells = []
        for cell in row:
            if isinstance(cell, bool):
                cells.append("true" if cell else "false")
            elif isinstance(cell, int):
                cells.append(str(cell))
            elif isinstance(cell, float):
                cells.append(format_float(cell))
            else:
                cells.append(str(cell))
        stream.write(",".join(cells) + "\n")
