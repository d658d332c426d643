"""Seeded self-check battery for the phase engine and the oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
import logging
from typing import Callable, List, Optional, Tuple

import numpy as np

from services.oracle.brute_force import oracle_deficit
from services.phase.engine import deficit_closed_form_schmidt, dynamical_deficit, phase_deficit
from services.phase.principal import wrap_phase
from services.qstate.core import schmidt_decompose
from services.shared.exceptions import UndefinedPhaseError
from services.shared.types import DeficitReport, LocalUnitarySet
from utils.random_states import (
    make_rng,
    random_hermitian,
    random_local_unitaries,
    random_product_state,
    random_state,
    random_unitary,
)

logger = logging.getLogger("deficit")

SHAPES: Tuple[Tuple[int, ...], ...] = ((2, 2), (2, 3), (4, 4), (2, 2, 2), (4, 4, 4))


@dataclass(frozen=True)
class SelfTestCheck:
    name: str
    samples: int
    skipped: int
    max_error: float
    threshold: float

    @property
    def passed(self) -> bool:
        return self.samples > 0 and self.max_error < self.threshold


@dataclass(frozen=True)
class SelfTestSummary:
    seed: int
    checks: List[SelfTestCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _deficit_gap(a: DeficitReport, b: DeficitReport) -> Optional[float]:
    if a.deficit is None and b.deficit is None:
        return None
    if a.deficit is None or b.deficit is None:
        return float("inf")
    return abs(wrap_phase(a.deficit - b.deficit))


def _run(
    name: str, count: int, threshold: float, sample: Callable[[int], Optional[float]]
) -> SelfTestCheck:
    errors = [sample(i) for i in range(count)]
    measured = [e for e in errors if e is not None]
    check = SelfTestCheck(
        name=name,
        samples=len(measured),
        skipped=len(errors) - len(measured),
        max_error=max(measured) if measured else float("inf"),
        threshold=threshold,
    )
    logger.info(
        "[SELFTEST] %s: %s max_error=%.3e over %d samples (%d skipped)",
        name,
        "ok" if check.passed else "FAILED",
        check.max_error,
        check.samples,
        check.skipped,
    )
    return check


def product_nullity(rng: np.random.Generator, count: int) -> SelfTestCheck:
    def sample(i: int) -> Optional[float]:
        dims = SHAPES[i % len(SHAPES)]
        psi = random_product_state(dims, rng)
        local_set = random_local_unitaries(dims, rng)
        reports = (phase_deficit(psi, local_set), oracle_deficit(psi, local_set))
        values = [r.deficit for r in reports]
        if any(v is None for v in values):
            return None
        return max(abs(v) for v in values)

    return _run("product_nullity", count, 1e-10, sample)


def cross_path_identity(rng: np.random.Generator, count: int) -> SelfTestCheck:
    def sample(i: int) -> Optional[float]:
        dims = SHAPES[i % len(SHAPES)]
        psi = random_product_state(dims, rng) if i % 2 else random_state(dims, rng)
        local_set = random_local_unitaries(dims, rng)
        return _deficit_gap(phase_deficit(psi, local_set), oracle_deficit(psi, local_set))

    return _run("cross_path_identity", count, 1e-10, sample)


def schmidt_closed_form(rng: np.random.Generator, count: int) -> SelfTestCheck:
    def sample(i: int) -> Optional[float]:
        dims = tuple(int(d) for d in rng.integers(2, 9, size=2))
        psi = random_state(dims, rng)
        u_a, u_b = random_unitary(dims[0], rng), random_unitary(dims[1], rng)
        report = phase_deficit(psi, LocalUnitarySet((u_a, u_b)))
        try:
            closed = deficit_closed_form_schmidt(schmidt_decompose(psi, [0]), u_a, u_b)
        except UndefinedPhaseError:
            return None
        if report.deficit is None:
            return float("inf")
        return abs(wrap_phase(closed - report.deficit))

    return _run("schmidt_closed_form", count, 1e-9, sample)


def dynamical_additivity(rng: np.random.Generator, count: int) -> SelfTestCheck:
    def sample(i: int) -> Optional[float]:
        dims = tuple(int(d) for d in rng.integers(2, 5, size=2))
        hamiltonians = [random_hermitian(d, rng) for d in dims]
        psi = random_state(dims, rng)
        t = float(rng.uniform(0.0, 2.0))
        return abs(dynamical_deficit(psi, hamiltonians, t))

    return _run("dynamical_additivity", count, 1e-10, sample)


def run_selftest(seed: int, count: int = 200) -> SelfTestSummary:
    rng = make_rng(seed)
    half = max(1, count // 2)
    checks = [
        product_nullity(rng, count),
        cross_path_identity(rng, count),
        schmidt_closed_form(rng, half),
        dynamical_additivity(rng, half),
    ]
    return SelfTestSummary(seed=seed, checks=checks)
