"""Plot-ready CSV datasets with a commented provenance header."""

from __future__ import annotations

from dataclasses import dataclass
import io
import logging
import math
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from constants.artifact import ARTIFACT_NAME, ARTIFACT_VERSION
from constants.enum import Unit
from services.shared.exceptions import PersistenceError

logger = logging.getLogger("deficit.sweep")

UNDEFINED_TOKEN = "undefined"


@dataclass(frozen=True)
class DatasetColumn:
    name: str
    unit: Unit


def format_value(value: Any) -> str:
    """17 significant digits; None and NaN become the undefined token."""
    if value is None:
        return UNDEFINED_TOKEN
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return UNDEFINED_TOKEN
        return format(value, ".17g")
    return str(value)


def format_mapping(values: Mapping[str, Any]) -> str:
    return ", ".join(f"{k}={format_value(v)}" for k, v in values.items())


def render_dataset(
    quantity: str,
    columns: Sequence[DatasetColumn],
    rows: Iterable[Sequence[Any]],
    parameters: Mapping[str, Any],
    seed: int,
    config: str,
) -> str:
    buf = io.StringIO()
    buf.write(f"# quantity: {quantity}\n")
    buf.write("# units: " + ", ".join(f"{c.name}={c.unit.value}" for c in columns) + "\n")
    buf.write(f"# parameters: {format_mapping(parameters)}\n")
    buf.write(f"# seed: {seed}\n")
    buf.write(f"# version: {ARTIFACT_NAME} {ARTIFACT_VERSION}\n")
    buf.write(f"# config: {config}\n")
    buf.write(",".join(c.name for c in columns) + "\n")
    for row in rows:
        if len(row) != len(columns):
            raise PersistenceError(
                "Row width does not match the column header",
                error_code="ROW_WIDTH",
                context={"expected": len(columns), "actual": len(row)},
            )
        buf.write(",".join(format_value(v) for v in row) + "\n")
    return buf.getvalue()


def write_text(path: Path, text: str) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as e:
        raise PersistenceError(
            f"Cannot write {path}",
            error_code="WRITE_FAILED",
            context={"path": str(path)},
            cause=e,
        ) from e
    logger.info("[SWEEP] wrote %s (%d bytes)", path, len(text.encode("utf-8")))
    return path


def write_dataset(
    path: Path,
    quantity: str,
    columns: Sequence[DatasetColumn],
    rows: Iterable[Sequence[Any]],
    parameters: Mapping[str, Any],
    seed: int,
    config: str,
) -> Path:
    return write_text(path, render_dataset(quantity, columns, rows, parameters, seed, config))
