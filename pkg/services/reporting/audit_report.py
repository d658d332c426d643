"""Structured-text audit report: one ``[formula_id]`` block per record.

Values are JSON-encoded so strings, nulls, floats and worst-point
mappings read back unambiguously.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import Any, Dict, Mapping, Sequence

import orjson

from constants.artifact import ARTIFACT_NAME, ARTIFACT_VERSION
from services.reporting.csv_writer import write_text
from services.shared.exceptions import PersistenceError
from services.shared.types import DiscrepancyRecord

RECORD_FIELDS = (
    "classification",
    "max_abs_error",
    "worst_point",
    "evaluated_points",
    "undefined_points",
    "finite_where_oracle_undefined",
    "grid",
    "notes",
)


def _encode(value: Any) -> str:
    return orjson.dumps(value, option=orjson.OPT_SORT_KEYS).decode("utf-8")


def render_audit_report(
    records: Sequence[DiscrepancyRecord], parameters: Mapping[str, Any], seed: int
) -> str:
    buf = io.StringIO()
    buf.write("# quantity: published closed forms against the brute-force oracle\n")
    buf.write(f"# parameters: {_encode(dict(parameters))}\n")
    units = ", ".join(f"{r.formula_id}={r.extra.get('unit', 'dimensionless')}" for r in records)
    buf.write(f"# units: {units}\n")
    buf.write(f"# seed: {seed}\n")
    buf.write(f"# version: {ARTIFACT_NAME} {ARTIFACT_VERSION}\n")
    for record in records:
        buf.write(f"\n[{record.formula_id}]\n")
        for name in RECORD_FIELDS:
            value = getattr(record, name)
            if name == "classification":
                value = record.classification.value
            buf.write(f"{name} = {_encode(value)}\n")
        for name in sorted(record.extra):
            buf.write(f"{name} = {_encode(record.extra[name])}\n")
    return buf.getvalue()


def write_audit_report(
    path: Path,
    records: Sequence[DiscrepancyRecord],
    parameters: Mapping[str, Any],
    seed: int,
) -> Path:
    return write_text(path, render_audit_report(records, parameters, seed))


def parse_audit_report(text: str) -> Dict[str, Dict[str, Any]]:
    """Record blocks keyed by formula id; header comments are skipped."""
    blocks: Dict[str, Dict[str, Any]] = {}
    current: Dict[str, Any] | None = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            current = blocks.setdefault(line[1:-1], {})
            continue
        key, sep, value = line.partition(" = ")
        if current is None or not sep:
            raise PersistenceError(
                "Malformed audit report line",
                error_code="BAD_REPORT_LINE",
                context={"line": lineno},
            )
        current[key] = orjson.loads(value)
    return blocks
