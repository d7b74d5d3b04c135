"""Deterministic JSON and CSV writers with provenance stamps."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from ..config import ENGINE_VERSION, SCHEMA_VERSION


def compute_sha256(content: bytes | str) -> str:
    """Compute SHA256 hash of content.

    Args:
        content: Bytes or string to hash

    Returns:
        Hex-encoded SHA256 hash
    """
    if isinstance(content, str):
        content = content.encode("utf-8")
    return hashlib.sha256(content).hexdigest()


def _jsonable(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return _jsonable(value.model_dump(mode="json"))
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, float) and not math.isfinite(value):
        # JSON has no inf/nan; T1 = inf for a lossless slab is common
        return repr(value)
    return value


def to_json(payload: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(_jsonable(payload), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def inputs_fingerprint(inputs: Mapping[str, Any]) -> str:
    return compute_sha256(json.dumps(_jsonable(inputs), sort_keys=True, separators=(",", ":")))


def envelope(
    kind: str,
    inputs: Mapping[str, Any],
    body: Any,
    warnings: Sequence[str] = (),
) -> dict[str, Any]:
    """Wrap a result with schema/engine versions and the input fingerprint."""
    return {
        "schema_version": SCHEMA_VERSION,
        "engine_version": ENGINE_VERSION,
        "kind": kind,
        "inputs": _jsonable(dict(inputs)),
        "inputs_sha256": inputs_fingerprint(inputs),
        "result": _jsonable(body),
        "warnings": list(warnings),
    }


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def to_csv(rows: Sequence[Mapping[str, Any]], columns: Sequence[str] | None = None) -> str:
    """CSV with a header row; floats written with repr so they re-read exactly."""
    if columns is None:
        columns = list(rows[0]) if rows else []
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def write_text(path: Path, content: str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content, encoding="utf-8")
    return path
