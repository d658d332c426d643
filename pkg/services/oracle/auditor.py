"""Grades the published closed forms against the brute-force oracle.

Each formula id maps to a pair of evaluators over one scenario's
parameter model. Angular quantities are compared modulo 2 pi; complex
traces and real measures by absolute difference.
"""

from __future__ import annotations

from dataclasses import dataclass
import logging
import math
from typing import Any, Callable, Dict, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel

from constants.enum import Classification, FormulaId, Scenario, Unit
from services.config import AuditConfig, get_service_config
from services.measures.entanglement import entanglement_entropy, wootters_concurrence
from services.oracle.brute_force import oracle_amplitudes, oracle_deficit, oracle_reduced
from services.phase.principal import wrap_phase
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
from services.scenarios.models import ScenarioSetup
from services.shared.exceptions import AuditError
from services.shared.types import DiscrepancyRecord, ParameterGrid
from utils.concurrency import ordered_map

logger = logging.getLogger("deficit.audit")

Value = Union[None, float, complex, Tuple[Optional[float], ...]]

FIG1_FIXED: Dict[str, float] = {
    "n_minus": 2.0,
    "n_plus": 1.0,
    "xi": math.pi / 4.0,
    "theta": math.pi,
}
FIG2_FIXED: Dict[str, float] = {"g1": math.pi / 2.0, "g4": math.pi / 2.0}
MICRO_MACRO_LAMBDAS = (0.55, 0.65, 0.75, 0.85, 0.95)


@dataclass(frozen=True)
class AuditedFormula:
    formula_id: FormulaId
    scenario: Scenario
    published: Callable[[Any], Value]
    oracle: Callable[[Any], Value]
    unit: Unit
    angular: bool
    notes: str = ""


def _setup(scenario: Scenario, params: BaseModel) -> ScenarioSetup:
    builders = {
        Scenario.MICRO_MACRO: micro_macro_build,
        Scenario.CAT: cat_build,
        Scenario.KONDO: kondo_build,
    }
    return builders[scenario](params)


def _oracle_phases(scenario: Scenario, params: BaseModel) -> Tuple[Optional[float], ...]:
    """(global, local_0, .., local_n, deficit) from the brute-force path."""
    psi, local_set = _setup(scenario, params)
    report = oracle_deficit(psi, local_set)
    return (
        (report.global_phase.as_optional(),)
        + tuple(p.as_optional() for p in report.local_phases)
        + (report.deficit,)
    )


def _oracle_trace(index: int) -> Callable[[Any], Value]:
    def evaluate(params: Any) -> Value:
        psi, local_set = cat_build(params)
        amps = oracle_amplitudes(psi, local_set)
        return amps.global_amplitude if index < 0 else amps.local_traces[index]

    return evaluate


def _oracle_cat_entropy_bits(params: Any) -> Value:
    psi, _ = cat_build(params)
    return entanglement_entropy(oracle_reduced(psi, [1])) / math.log(2.0)


def _oracle_kondo_concurrence(params: Any) -> Value:
    psi, _ = kondo_build(params)
    return wootters_concurrence(oracle_reduced(psi, [0, 3]))


def _micro_macro_published(params: Any) -> Value:
    closed = micro_macro_closed(params)
    return (closed.phi_global, closed.phi_a, closed.phi_b, closed.delta)


def _micro_macro_oracle(params: Any) -> Value:
    return _oracle_phases(Scenario.MICRO_MACRO, params)


def _kondo_oracle(*picks: int) -> Callable[[Any], Value]:
    def evaluate(params: Any) -> Value:
        phases = _oracle_phases(Scenario.KONDO, params)
        return tuple(phases[i] for i in picks) if len(picks) > 1 else phases[picks[0]]

    return evaluate


_SPLIT_NOTE = (
    "Printed third term pairs (k^2 + k*^2) sin with (k^2 - k*^2) cos, the reverse of the "
    "Im/Re split of Tr[rho_B V]. The printed numerators and denominators are complex; "
    "each arctangent takes their real parts, so the third term is +-pi/2 or undefined."
)
_MISSING_TERM_NOTE = (
    "Printed global-phase denominator lacks the cos^2(theta) constant term of the direct "
    "inner product (1/4)[(1+sin^2)(e^{-ig1}+e^{-ig4}) + cos^2(1+e^{-i(g1+g4)})]."
)

REGISTRY: Dict[FormulaId, AuditedFormula] = {
    f.formula_id: f
    for f in (
        AuditedFormula(
            FormulaId.MICRO_MACRO_CLOSED,
            Scenario.MICRO_MACRO,
            _micro_macro_published,
            _micro_macro_oracle,
            Unit.RADIANS,
            angular=True,
            notes="Compares (global, local A, local B, deficit) jointly.",
        ),
        AuditedFormula(
            FormulaId.CAT_TRACE_AB,
            Scenario.CAT,
            lambda p: cat_closed(p).trace_ab,
            _oracle_trace(-1),
            Unit.DIMENSIONLESS,
            angular=False,
        ),
        AuditedFormula(
            FormulaId.CAT_TRACE_A,
            Scenario.CAT,
            lambda p: cat_closed(p).trace_a,
            _oracle_trace(0),
            Unit.DIMENSIONLESS,
            angular=False,
        ),
        AuditedFormula(
            FormulaId.CAT_TRACE_B,
            Scenario.CAT,
            lambda p: cat_closed(p).trace_b,
            _oracle_trace(1),
            Unit.DIMENSIONLESS,
            angular=False,
        ),
        AuditedFormula(
            FormulaId.CAT_DELTA,
            Scenario.CAT,
            lambda p: cat_closed(p).delta,
            lambda p: _oracle_phases(Scenario.CAT, p)[-1],
            Unit.RADIANS,
            angular=True,
            notes=_SPLIT_NOTE,
        ),
        AuditedFormula(
            FormulaId.CAT_ENTROPY,
            Scenario.CAT,
            lambda p: cat_closed(p).entropy_bits,
            _oracle_cat_entropy_bits,
            Unit.BITS,
            angular=False,
            notes=(
                "Printed exponent -n_-/2 - n_+/2 + n_- n_+ cos(xi) used verbatim; the coherent "
                "overlap carries sqrt(n_- n_+) cos(xi). Oracle entropy converted from nats."
            ),
        ),
        AuditedFormula(
            FormulaId.KONDO_GLOBAL,
            Scenario.KONDO,
            lambda p: kondo_closed(p).phi_global,
            _kondo_oracle(0),
            Unit.RADIANS,
            angular=True,
            notes=_MISSING_TERM_NOTE,
        ),
        AuditedFormula(
            FormulaId.KONDO_LOCALS,
            Scenario.KONDO,
            lambda p: (kondo_closed(p).phi_1, kondo_closed(p).phi_4),
            _kondo_oracle(1, 4),
            Unit.RADIANS,
            angular=True,
            notes="Local phases of the outer spins; the inner spins evolve trivially.",
        ),
        AuditedFormula(
            FormulaId.KONDO_DELTA,
            Scenario.KONDO,
            lambda p: kondo_closed(p).delta,
            _kondo_oracle(5),
            Unit.RADIANS,
            angular=True,
            notes="Inherits the global-phase deviation. " + _MISSING_TERM_NOTE,
        ),
        AuditedFormula(
            FormulaId.KONDO_E_FROM_DELTA,
            Scenario.KONDO,
            lambda p: kondo_closed(p).e_from_delta,
            _oracle_kondo_concurrence,
            Unit.DIMENSIONLESS,
            angular=False,
            notes="Deficit-to-concurrence relation checked against the Wootters concurrence "
            "of the outer-spin reduced state.",
        ),
        AuditedFormula(
            FormulaId.KONDO_CONCURRENCE,
            Scenario.KONDO,
            lambda p: kondo_concurrence(p.theta),
            _oracle_kondo_concurrence,
            Unit.DIMENSIONLESS,
            angular=False,
            notes="Wootters concurrence of the outer-spin reduced state.",
        ),
    )
}


def _interior_angles(count: int) -> np.ndarray:
    return np.linspace(0.0, math.pi, count + 2)[1:-1]


def default_grid(formula_id: FormulaId, config: Optional[AuditConfig] = None) -> ParameterGrid:
    cfg = config or get_service_config().audit
    scenario = REGISTRY[FormulaId(formula_id)].scenario
    if scenario is Scenario.MICRO_MACRO:
        angles = _interior_angles(cfg.micro_macro_angles)
        points = [
            {"lambda0": lam, "g1": float(g1), "g2": float(g2)}
            for lam in MICRO_MACRO_LAMBDAS
            for g1 in angles
            for g2 in angles
        ]
        description = (
            f"lambda0 in {list(MICRO_MACRO_LAMBDAS)} x g1, g2 in "
            f"linspace(0, pi, {cfg.micro_macro_angles + 2})[1:-1]"
        )
    elif scenario is Scenario.CAT:
        points = [
            {**FIG1_FIXED, "psi": float(psi), "tail": cfg.cat_tail}
            for psi in np.linspace(0.0, math.pi, cfg.cat_psi_points)
        ]
        description = (
            f"n_minus=2, n_plus=1, xi=pi/4, theta=pi, tail={cfg.cat_tail:g}, "
            f"psi in linspace(0, pi, {cfg.cat_psi_points})"
        )
    else:
        points = [
            {**FIG2_FIXED, "theta": float(theta)}
            for theta in np.linspace(0.0, math.pi, cfg.kondo_theta_points)
        ]
        description = f"g1=g4=pi/2, theta in linspace(0, pi, {cfg.kondo_theta_points})"
    return ParameterGrid(description=description, points=tuple(points))


def _as_tuple(value: Value) -> Tuple[Any, ...]:
    return value if isinstance(value, tuple) else (value,)


def _point_error(published: Value, oracle: Value, angular: bool) -> float:
    errors = [
        abs(wrap_phase(float(p) - float(o))) if angular else abs(complex(p) - complex(o))
        for p, o in zip(_as_tuple(published), _as_tuple(oracle), strict=True)
    ]
    return float(max(errors))


def compare_to_oracle(
    formula_id: FormulaId | str,
    grid: Optional[ParameterGrid] = None,
    workers: Optional[int] = None,
) -> DiscrepancyRecord:
    try:
        formula = REGISTRY[FormulaId(formula_id)]
    except ValueError as e:
        raise AuditError(
            f"Unknown formula id '{formula_id}'",
            error_code="UNKNOWN_FORMULA",
            context={"formula_id": str(formula_id), "known": [f.value for f in FormulaId]},
            cause=e,
        ) from e
    grid = grid if grid is not None else default_grid(formula.formula_id)
    if len(grid) == 0:
        raise AuditError(
            "Audit grid is empty",
            error_code="EMPTY_GRID",
            context={"formula_id": formula.formula_id.value},
        )
    cfg = get_service_config().audit
    n_workers = cfg.workers if workers is None else workers

    def evaluate(point: Dict[str, float]) -> Tuple[Value, Value]:
        params = params_for(formula.scenario, point)
        return formula.published(params), formula.oracle(params)

    logger.info(
        "[AUDIT] %s over %d points (workers=%d)", formula.formula_id.value, len(grid), n_workers
    )
    results = ordered_map(evaluate, list(grid.points), n_workers)

    max_error: Optional[float] = None
    worst: Optional[Dict[str, float]] = None
    evaluated = undefined = finite_where_undefined = 0
    for point, (published, oracle) in zip(grid.points, results, strict=True):
        oracle_undefined = any(v is None for v in _as_tuple(oracle))
        published_undefined = any(v is None for v in _as_tuple(published))
        if oracle_undefined:
            undefined += 1
            if not published_undefined:
                finite_where_undefined += 1
            continue
        if published_undefined:
            undefined += 1
            continue
        err = _point_error(published, oracle, formula.angular)
        evaluated += 1
        if max_error is None or err > max_error:
            max_error, worst = err, dict(point)

    classification = (
        Classification.CONFIRMED
        if max_error is not None
        and max_error < cfg.confirm_threshold
        and finite_where_undefined == 0
        else Classification.DEVIATES
    )
    logger.info(
        "[AUDIT] %s -> %s max_abs_error=%s undefined=%d",
        formula.formula_id.value,
        classification.value,
        "n/a" if max_error is None else f"{max_error:.3e}",
        undefined,
    )
    return DiscrepancyRecord(
        formula_id=formula.formula_id.value,
        grid=grid.description,
        max_abs_error=max_error,
        classification=classification,
        worst_point=worst,
        evaluated_points=evaluated,
        undefined_points=undefined,
        finite_where_oracle_undefined=finite_where_undefined,
        notes=formula.notes,
        extra={"scenario": formula.scenario.value, "unit": formula.unit.value},
    )


def run_audit(
    formula_ids: Optional[Sequence[FormulaId | str]] = None, workers: Optional[int] = None
) -> list[DiscrepancyRecord]:
    """Every requested formula on its default grid, in registry order."""
    ids = list(formula_ids) if formula_ids else list(REGISTRY)
    return [compare_to_oracle(f, None, workers) for f in ids]

