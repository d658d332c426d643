"""Parsing of CLI values and flat ``key = value`` config files."""

from __future__ import annotations

import math
from pathlib import Path
import re
from typing import Dict, Tuple

from services.shared.exceptions import ConfigurationError

_PI_FORM = re.compile(
    r"^(?P<sign>[+-]?)"
    r"(?:(?P<coef>\d+(?:\.\d*)?|\.\d+)\s*\*?\s*)?"
    r"pi(?:\s*/\s*(?P<den>\d+(?:\.\d*)?))?$"
)


def parse_number(text: str) -> float:
    """Float literal or a multiple of pi such as ``pi``, ``-pi/3``, ``3*pi/4``, ``0.5pi``."""
    raw = text.strip().lower()
    match = _PI_FORM.match(raw)
    if match:
        value = math.pi * float(match.group("coef") or 1.0)
        if match.group("den"):
            den = float(match.group("den"))
            if den == 0.0:
                raise ConfigurationError(
                    f"Division by zero in '{text}'", error_code="BAD_NUMBER"
                )
            value /= den
        return -value if match.group("sign") == "-" else value
    try:
        value = float(raw)
    except ValueError as e:
        raise ConfigurationError(
            f"Not a number: '{text}'", error_code="BAD_NUMBER", context={"value": text}, cause=e
        ) from e
    if not math.isfinite(value):
        raise ConfigurationError(f"Non-finite number: '{text}'", error_code="BAD_NUMBER")
    return value


def parse_assignment(text: str) -> Tuple[str, str]:
    key, sep, value = text.partition("=")
    key, value = key.strip(), value.strip()
    if not sep or not key or not value:
        raise ConfigurationError(
            f"Expected key=value, got '{text}'",
            error_code="BAD_ASSIGNMENT",
            context={"value": text},
        )
    return key, value


def parse_sweep(text: str) -> Tuple[str, float, float, int]:
    """``key=start:stop:count`` -> (key, start, stop, count)."""
    key, spec = parse_assignment(text)
    parts = spec.split(":")
    if len(parts) != 3:
        raise ConfigurationError(
            f"Malformed range '{spec}', expected start:stop:count",
            error_code="MALFORMED_RANGE",
            context={"value": text},
        )
    start, stop = parse_number(parts[0]), parse_number(parts[1])
    try:
        count = int(parts[2].strip())
    except ValueError as e:
        raise ConfigurationError(
            f"Point count must be an integer, got '{parts[2]}'",
            error_code="MALFORMED_RANGE",
            context={"value": text},
            cause=e,
        ) from e
    if count < 1:
        raise ConfigurationError(
            "Point count must be >= 1", error_code="MALFORMED_RANGE", context={"count": count}
        )
    return key, start, stop, count


def read_flat_config(path: Path) -> Dict[str, str]:
    """Read ``key = value`` lines; ``#`` starts a comment, later keys win."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(
            f"Cannot read config file {path}",
            error_code="CONFIG_UNREADABLE",
            context={"path": str(path)},
            cause=e,
        ) from e
    values: Dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        try:
            key, value = parse_assignment(stripped)
        except ConfigurationError as e:
            e.context["line"] = lineno
            raise
        values[key] = value
    return values
