"""Per-point dataset rows: published closed forms next to oracle values."""

from __future__ import annotations

import math
from typing import Any, Callable, Dict, List, Tuple

from constants.enum import Scenario, Unit
from services.measures.entanglement import entanglement_entropy
from services.oracle.brute_force import oracle_deficit, oracle_reduced
from services.reporting.csv_writer import DatasetColumn
from services.scenarios import (
    cat_build,
    cat_closed,
    kondo_build,
    kondo_closed,
    kondo_concurrence,
    micro_macro_build,
    micro_macro_closed,
    params_for,
)

QUANTITY_COLUMNS: Dict[Scenario, Tuple[DatasetColumn, ...]] = {
    Scenario.MICRO_MACRO: (
        DatasetColumn("delta_published", Unit.RADIANS),
        DatasetColumn("delta_oracle", Unit.RADIANS),
        DatasetColumn("entropy_oracle", Unit.NATS),
        DatasetColumn("witnessed", Unit.DIMENSIONLESS),
    ),
    Scenario.CAT: (
        DatasetColumn("delta_published", Unit.RADIANS),
        DatasetColumn("delta_oracle", Unit.RADIANS),
        DatasetColumn("entropy_published", Unit.BITS),
        DatasetColumn("entropy_oracle", Unit.BITS),
    ),
    Scenario.KONDO: (
        DatasetColumn("delta_published", Unit.RADIANS),
        DatasetColumn("concurrence", Unit.DIMENSIONLESS),
        DatasetColumn("delta_oracle", Unit.RADIANS),
    ),
}

SWEEP_UNITS: Dict[str, Unit] = {
    "lambda0": Unit.DIMENSIONLESS,
    "n_minus": Unit.DIMENSIONLESS,
    "n_plus": Unit.DIMENSIONLESS,
    "tail": Unit.DIMENSIONLESS,
    "n_max": Unit.DIMENSIONLESS,
}


def _micro_macro_row(params: Any) -> List[Any]:
    psi, local_set = micro_macro_build(params)
    report = oracle_deficit(psi, local_set)
    entropy = entanglement_entropy(oracle_reduced(psi, [0]))
    return [micro_macro_closed(params).delta, report.deficit, entropy, report.entangled_witnessed]


def _cat_row(params: Any) -> List[Any]:
    psi, local_set = cat_build(params)
    closed = cat_closed(params)
    report = oracle_deficit(psi, local_set)
    entropy_bits = entanglement_entropy(oracle_reduced(psi, [1])) / math.log(2.0)
    return [closed.delta, report.deficit, closed.entropy_bits, entropy_bits]


def _kondo_row(params: Any) -> List[Any]:
    psi, local_set = kondo_build(params)
    report = oracle_deficit(psi, local_set)
    return [kondo_closed(params).delta, kondo_concurrence(params.theta), report.deficit]


_ROW_BUILDERS: Dict[Scenario, Callable[[Any], List[Any]]] = {
    Scenario.MICRO_MACRO: _micro_macro_row,
    Scenario.CAT: _cat_row,
    Scenario.KONDO: _kondo_row,
}


def sweep_columns(scenario: Scenario, sweep_key: str) -> Tuple[DatasetColumn, ...]:
    unit = SWEEP_UNITS.get(sweep_key, Unit.RADIANS)
    return (DatasetColumn(sweep_key, unit),) + QUANTITY_COLUMNS[Scenario(scenario)]


def evaluate_row(scenario: Scenario, point: Dict[str, float], sweep_key: str) -> List[Any]:
    """Swept value followed by the scenario's quantity columns."""
    params = params_for(scenario, point)
    return [point[sweep_key]] + _ROW_BUILDERS[Scenario(scenario)](params)
