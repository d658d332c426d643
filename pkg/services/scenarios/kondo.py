"""Boundary spins of a Kondo-type chain: four qubits, outer two driven.

Basis index is s1*8 + s2*4 + s3*2 + s4 so the label |s1 s2 s3 s4> reads
directly as a binary number.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from services.config import numerics
from services.phase.principal import arctan_pair, wrap_phase
from services.qstate.gates import projector_phase_unitary
from services.scenarios.models import KondoClosedForm, KondoParams, ScenarioSetup
from services.shared.types import LocalUnitarySet, Operator, StateVector

DIMS = (2, 2, 2, 2)


def _label(bits: str) -> int:
    return int(bits, 2)


def kondo_amplitudes(theta: float) -> np.ndarray:
    amps = np.zeros(16, dtype=np.complex128)
    amps[[_label("0011"), _label("1100")]] = -0.5j * math.sin(theta)
    amps[[_label("1001"), _label("0110")]] = -0.5 * math.cos(theta)
    amps[[_label("0101"), _label("1010")]] = 0.5 * cmath.exp(1j * theta)
    return amps


def kondo_build(params: KondoParams) -> ScenarioSetup:
    initial = StateVector.from_amplitudes(kondo_amplitudes(params.theta), DIMS)
    up = StateVector.basis((2,), (1,))
    local_set = LocalUnitarySet(
        (
            projector_phase_unitary(up, params.g1),
            Operator.identity((2,)),
            Operator.identity((2,)),
            projector_phase_unitary(up, params.g4),
        )
    )
    return ScenarioSetup(initial, local_set)


def kondo_evolved_published(params: KondoParams) -> StateVector:
    """Printed evolved state: each basis term picks up e^{-i g} per excited outer spin."""
    theta, g1, g4 = params.theta, params.g1, params.g4
    amps = np.zeros(16, dtype=np.complex128)
    amps[_label("0011")] = -0.5j * math.sin(theta) * cmath.exp(-1j * g4)
    amps[_label("1100")] = -0.5j * math.sin(theta) * cmath.exp(-1j * g1)
    amps[_label("1001")] = -0.5 * math.cos(theta) * cmath.exp(-1j * (g1 + g4))
    amps[_label("0110")] = -0.5 * math.cos(theta)
    amps[_label("0101")] = 0.5 * cmath.exp(1j * theta) * cmath.exp(-1j * g4)
    amps[_label("1010")] = 0.5 * cmath.exp(1j * theta) * cmath.exp(-1j * g1)
    return StateVector.from_amplitudes(amps, DIMS)


def kondo_e_from_delta(delta: float | None) -> float | None:
    """E = (tan D + 2) / (tan D - 2); None where tan D is singular or equals 2."""
    if delta is None:
        return None
    eps = numerics().epsilon_vis
    if abs(math.cos(delta)) < eps:
        return None
    tan_d = math.tan(delta)
    if abs(tan_d - 2.0) < eps:
        return None
    return (tan_d + 2.0) / (tan_d - 2.0)


def kondo_closed(params: KondoParams) -> KondoClosedForm:
    g1, g4 = params.g1, params.g4
    s2 = math.sin(params.theta) ** 2
    num = -(1.0 + s2) * (math.sin(g1) + math.sin(g4)) - math.sin(g1 + g4) + s2 * math.sin(g1 + g4)
    den = (1.0 + s2) * (math.cos(g1) + math.cos(g4)) + math.cos(g1 + g4) - s2 * math.cos(g1 + g4)

    phi_global = arctan_pair(num, den)
    phi_1 = arctan_pair(-math.sin(g1), 1.0 + math.cos(g1))
    phi_4 = arctan_pair(-math.sin(g4), 1.0 + math.cos(g4))

    delta = None
    if phi_global.defined and phi_1.defined and phi_4.defined:
        delta = wrap_phase(phi_global.phase - phi_1.phase - phi_4.phase)
    return KondoClosedForm(
        phi_global=phi_global.as_optional(),
        phi_1=phi_1.as_optional(),
        phi_4=phi_4.as_optional(),
        delta=delta,
        e_from_delta=kondo_e_from_delta(delta),
    )


def kondo_concurrence(theta: float) -> float:
    """max(0, (1 - 3 cos 2 theta) / 4)."""
    return max(0.0, (1.0 - 3.0 * math.cos(2.0 * theta)) / 4.0)
