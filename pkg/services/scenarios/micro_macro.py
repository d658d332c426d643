"""Two-level micro-macro state under independent projector phase shifts."""

from __future__ import annotations

import math

import numpy as np
from scipy.special import entr

from services.phase.principal import arctan_pair, wrap_phase
from services.qstate.gates import projector_phase_unitary
from services.scenarios.models import (
    MicroMacroClosedForm,
    MicroMacroInversion,
    MicroMacroParams,
    ScenarioSetup,
)
from services.shared.exceptions import ValidationError
from services.shared.types import LocalUnitarySet, StateVector

DIMS = (2, 2)


def micro_macro_build(params: MicroMacroParams) -> ScenarioSetup:
    amps = np.zeros(4, dtype=np.complex128)
    amps[0] = math.sqrt(params.lambda0)
    amps[3] = math.sqrt(params.lambda1)
    initial = StateVector.from_amplitudes(amps, DIMS, normalize=True)
    excited = StateVector.basis((2,), (1,))
    local_set = LocalUnitarySet(
        (
            projector_phase_unitary(excited, params.g1),
            projector_phase_unitary(excited, params.g2),
        )
    )
    return ScenarioSetup(initial, local_set)


def micro_macro_evolved_published(params: MicroMacroParams) -> StateVector:
    """sqrt(l0)|00> + sqrt(l1) e^{-i(g1 + g2)}|11>."""
    amps = np.zeros(4, dtype=np.complex128)
    amps[0] = math.sqrt(params.lambda0)
    amps[3] = math.sqrt(params.lambda1) * np.exp(-1j * (params.g1 + params.g2))
    return StateVector.from_amplitudes(amps, DIMS)


def micro_macro_closed(params: MicroMacroParams) -> MicroMacroClosedForm:
    l0, l1 = params.lambda0, params.lambda1
    g1, g2 = params.g1, params.g2

    phi_global = arctan_pair(-l1 * math.sin(g1 + g2), l0 + l1 * math.cos(g1 + g2))
    phi_a = arctan_pair(-l1 * math.sin(g1), 1.0 + l1 * (math.cos(g1) - 1.0))
    phi_b = arctan_pair(-l1 * math.sin(g2), 1.0 + l1 * (math.cos(g2) - 1.0))

    delta = None
    if phi_global.defined and phi_a.defined and phi_b.defined:
        delta = wrap_phase(phi_global.phase - phi_a.phase - phi_b.phase)
    return MicroMacroClosedForm(
        phi_global=phi_global.as_optional(),
        phi_a=phi_a.as_optional(),
        phi_b=phi_b.as_optional(),
        delta=delta,
    )


def micro_macro_invert(delta: float) -> MicroMacroInversion:
    """Schmidt weights and entropy from a measured deficit.

    Uses l0 = 1 / (1 + tan(delta/2)); the result reproduces the forward
    deficit at g1 = g2 = pi/2 whenever l0 > 1/2.
    """
    if not math.isfinite(delta):
        raise ValidationError(
            "Deficit must be finite", error_code="BAD_DEFICIT", context={"delta": delta}
        )
    if delta < 0.0:
        raise ValidationError(
            "Negative deficit gives a negative tangent and no valid Schmidt weight",
            error_code="NEGATIVE_TANGENT",
            context={"delta": delta},
        )
    if delta >= math.pi:
        raise ValidationError(
            "tan(delta/2) is singular at delta = pi",
            error_code="TAN_SINGULARITY",
            context={"delta": delta},
        )
    lambda0 = 1.0 / (1.0 + math.tan(0.5 * delta))
    lambda1 = 1.0 - lambda0
    entropy = float(np.sum(entr(np.array([lambda0, lambda1]))))
    return MicroMacroInversion(lambda0=lambda0, lambda1=lambda1, entropy_nats=entropy)
