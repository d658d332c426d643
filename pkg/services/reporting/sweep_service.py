from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from pydantic import ValidationError as PydanticValidationError

from constants.enum import Scenario
from services.reporting.csv_writer import format_mapping, format_value, write_dataset
from services.reporting.rows import evaluate_row, sweep_columns
from services.scenarios import params_for, scenario_keys
from services.shared.exceptions import ConfigurationError
from utils.concurrency import ordered_map
from utils.parsing import parse_assignment, parse_number, parse_sweep, read_flat_config

logger = logging.getLogger("deficit.sweep")

RESERVED_KEYS = ("scenario", "sweep", "out", "seed", "tail")


class SweepRange(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    key: str
    start: float
    stop: float
    count: int = Field(ge=1)

    def values(self) -> List[float]:
        return [float(v) for v in np.linspace(self.start, self.stop, self.count)]

    def render(self) -> str:
        return f"{self.key}={format_value(self.start)}:{format_value(self.stop)}:{self.count}"


class SweepConfig(BaseModel):
    """Resolved sweep: scenario, fixed parameters, one swept axis, output and seed."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    scenario: Scenario
    fixed: Dict[str, float] = Field(default_factory=dict)
    sweep: SweepRange
    out: Path
    seed: int
    tail: float = Field(default=1e-12, gt=0.0, lt=1.0)

    @model_validator(mode="after")
    def _check_keys(self) -> "SweepConfig":
        known = set(scenario_keys(self.scenario)) - {"tail"}
        unknown = sorted(k for k in [*self.fixed, self.sweep.key] if k not in known)
        if unknown:
            raise ValueError(
                f"unknown parameter(s) {unknown} for scenario {self.scenario.value}; "
                f"expected a subset of {sorted(known)}"
            )
        if self.sweep.key in self.fixed:
            raise ValueError(f"'{self.sweep.key}' is both swept and fixed")
        params_for(self.scenario, self.points()[0])
        return self

    def base_parameters(self) -> Dict[str, float]:
        base = {k: self.fixed[k] for k in sorted(self.fixed)}
        if self.scenario is Scenario.CAT:
            base["tail"] = self.tail
        return base

    def points(self) -> List[Dict[str, float]]:
        base = self.base_parameters()
        return [{**base, self.sweep.key: v} for v in self.sweep.values()]

    def resolved(self) -> str:
        """Resolved config as embedded in dataset headers; the output path is left out."""
        parts = [
            f"scenario={self.scenario.value}",
            f"sweep={self.sweep.render()}",
            f"tail={format_value(self.tail)}",
            f"seed={self.seed}",
        ]
        if self.fixed:
            parts.append("set=" + format_mapping({k: self.fixed[k] for k in sorted(self.fixed)}))
        return "; ".join(parts)


def _scenario(value: str) -> Scenario:
    try:
        return Scenario(value.strip())
    except ValueError as e:
        raise ConfigurationError(
            f"Unknown scenario '{value}'",
            error_code="UNKNOWN_SCENARIO",
            context={"known": [s.value for s in Scenario]},
            cause=e,
        ) from e


def build_sweep_config(
    *,
    scenario: Optional[str] = None,
    assignments: Sequence[str] = (),
    sweep: Optional[str] = None,
    out: Optional[Path] = None,
    seed: Optional[int] = None,
    tail: Optional[float] = None,
    config_file: Optional[Path] = None,
    default_seed: int = 0,
    default_tail: float = 1e-12,
) -> SweepConfig:
    """Merge a flat config file with command-line overrides; the command line wins."""
    raw: Dict[str, str] = dict(read_flat_config(config_file)) if config_file else {}
    fixed_raw: Dict[str, str] = {k: v for k, v in raw.items() if k not in RESERVED_KEYS}
    for item in assignments:
        key, value = parse_assignment(item)
        fixed_raw[key] = value

    scenario_value = scenario or raw.get("scenario")
    sweep_value = sweep or raw.get("sweep")
    out_value = out or (Path(raw["out"]) if "out" in raw else None)
    missing = [
        name
        for name, value in (
            ("scenario", scenario_value),
            ("sweep", sweep_value),
            ("out", out_value),
        )
        if value is None
    ]
    if missing:
        raise ConfigurationError(
            f"Missing required setting(s): {', '.join(missing)}",
            error_code="MISSING_SETTING",
            context={"missing": missing},
        )

    key, start, stop, count = parse_sweep(sweep_value)
    try:
        resolved_seed = seed if seed is not None else int(raw.get("seed", default_seed))
    except ValueError as e:
        raise ConfigurationError("seed must be an integer", error_code="BAD_SEED", cause=e) from e
    if tail is not None:
        resolved_tail = tail
    else:
        resolved_tail = parse_number(raw["tail"]) if "tail" in raw else default_tail

    try:
        return SweepConfig(
            scenario=_scenario(scenario_value),
            fixed={k: parse_number(v) for k, v in fixed_raw.items()},
            sweep=SweepRange(key=key, start=start, stop=stop, count=count),
            out=Path(out_value),
            seed=resolved_seed,
            tail=resolved_tail,
        )
    except PydanticValidationError as e:
        raise ConfigurationError(
            "Invalid sweep configuration",
            error_code="INVALID_SWEEP_CONFIG",
            context={"errors": [err["msg"] for err in e.errors()]},
            cause=e,
        ) from e


def run_sweep(config: SweepConfig, workers: int = 1, quantity: Optional[str] = None) -> Path:
    key = config.sweep.key
    points = config.points()
    logger.info(
        "[SWEEP] %s over %s: %d points (workers=%d)",
        config.scenario.value,
        key,
        len(points),
        workers,
    )
    rows = ordered_map(lambda p: evaluate_row(config.scenario, p, key), points, workers)
    undefined = sum(1 for row in rows for v in row if v is None)
    if undefined:
        logger.warning("[SWEEP] %d undefined values written as tokens", undefined)
    return write_dataset(
        config.out,
        quantity=quantity or f"{config.scenario.value} sweep over {key}",
        columns=sweep_columns(config.scenario, key),
        rows=rows,
        parameters=config.base_parameters(),
        seed=config.seed,
        config=config.resolved(),
    )

