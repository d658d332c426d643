"""Pancharatnam phases and the phase deficit under local unitary evolution.

The deficit of a pure state |psi> under U_1 ⊗ ... ⊗ U_N is

    Arg <psi| U_1 ⊗ ... ⊗ U_N |psi>  -  sum_i Arg Tr[rho_i U_i]

with rho_i the single-factor reduced states. It vanishes for product
states, so a nonzero value witnesses entanglement. A zero value proves
nothing.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Sequence

import numpy as np

from constants.enum import OperatorKind
from services.config import numerics
from services.phase.principal import principal_arg, wrap_phase
from services.qstate.core import reduced_density
from services.qstate.gates import local_hamiltonian_sum
from services.shared.exceptions import (
    DimensionMismatchError,
    ValidationError,
)
from services.shared.types import (
    DeficitReport,
    LocalUnitarySet,
    Operator,
    PhaseResult,
    SchmidtForm,
    StateVector,
)

logger = logging.getLogger("deficit")


def pancharatnam_pure(initial: StateVector, final: StateVector) -> PhaseResult:
    return principal_arg(initial.inner(final))


def pancharatnam_mixed(rho: Operator, u: Operator) -> PhaseResult:
    """Arg Tr[rho U]."""
    if rho.shape.total != u.shape.total:
        raise DimensionMismatchError("pancharatnam_mixed", [rho.shape.total], [u.shape.total])
    return principal_arg(np.einsum("ij,ji->", rho.entries, u.entries))


def _require_hermitian(h: Operator) -> None:
    if h.kind not in (OperatorKind.HERMITIAN, OperatorKind.DENSITY):
        raise ValidationError(
            "Dynamical phase needs a Hermitian generator",
            error_code="NOT_HERMITIAN_GENERATOR",
            context={"kind": h.kind.value},
        )


def dynamical_phase(h: Operator, state: StateVector, t: float) -> float:
    """-<state|h|state> t, not reduced mod 2 pi."""
    _require_hermitian(h)
    return -h.expectation(state).real * t


def dynamical_phase_mixed(h: Operator, rho: Operator, t: float) -> float:
    """-Tr[rho h] t."""
    _require_hermitian(h)
    if rho.shape.total != h.shape.total:
        raise DimensionMismatchError("dynamical_phase_mixed", [rho.shape.total], [h.shape.total])
    return -np.einsum("ij,ji->", rho.entries, h.entries).real * t


def dynamical_deficit(psi: StateVector, hamiltonians: Sequence[Operator], t: float) -> float:
    """Global dynamical phase under sum_i H_i minus the local ones; zero up to rounding."""
    total = local_hamiltonian_sum(hamiltonians)
    if total.shape.dims != psi.shape.dims:
        raise DimensionMismatchError("dynamical_deficit", psi.shape.dims, total.shape.dims)
    global_phase = dynamical_phase(total, psi, t)
    local_sum = sum(
        dynamical_phase_mixed(h, reduced_density(psi, [i]), t) for i, h in enumerate(hamiltonians)
    )
    return global_phase - local_sum


def geometric_phase(total: PhaseResult, dynamical: float) -> float:
    """Total Pancharatnam phase minus the dynamical phase, wrapped."""
    return wrap_phase(total.require("total") - dynamical)


def apply_locals(psi: StateVector, local_set: LocalUnitarySet) -> StateVector:
    """(U_1 ⊗ ... ⊗ U_N)|psi>, one factor at a time on the amplitude tensor."""
    local_set.check_matches(psi.shape)
    t = psi.tensor
    for axis, op in enumerate(local_set.unitaries):
        t = np.moveaxis(np.tensordot(op.entries, t, axes=([1], [axis])), 0, axis)
    return StateVector(psi.shape, t.reshape(-1))


def phase_deficit(
    psi: StateVector, local_set: LocalUnitarySet, witness_tolerance: Optional[float] = None
) -> DeficitReport:
    tol = numerics().witness_tolerance if witness_tolerance is None else witness_tolerance
    evolved = apply_locals(psi, local_set)
    global_phase = pancharatnam_pure(psi, evolved)
    local_phases: List[PhaseResult] = [
        pancharatnam_mixed(reduced_density(psi, [i]), op)
        for i, op in enumerate(local_set.unitaries)
    ]

    undefined = (["global"] if not global_phase.defined else []) + [
        f"local[{i}]" for i, p in enumerate(local_phases) if not p.defined
    ]
    if undefined:
        logger.debug("[DEFICIT] undefined constituent phases: %s", undefined)
        return DeficitReport(
            global_phase=global_phase,
            local_phases=tuple(local_phases),
            deficit=None,
            deficit_unwrapped=None,
            entangled_witnessed=False,
            witness_tolerance=tol,
            undefined_phases=tuple(undefined),
        )

    raw = global_phase.phase - sum(p.phase for p in local_phases)
    deficit = wrap_phase(raw)
    return DeficitReport(
        global_phase=global_phase,
        local_phases=tuple(local_phases),
        deficit=deficit,
        deficit_unwrapped=raw,
        entangled_witnessed=abs(deficit) > tol,
        witness_tolerance=tol,
    )


def deficit_closed_form_schmidt(schmidt: SchmidtForm, u_a: Operator, u_b: Operator) -> float:
    """Bipartite deficit from the Schmidt form with U_kl = <a_k|U|a_l>, V_kl = <b_k|V|b_l>.

    Raises UndefinedPhaseError when any of the three transition sums vanishes.
    """
    basis_a, basis_b = schmidt.basis_a, schmidt.basis_b
    if u_a.shape.total != basis_a.shape[0]:
        raise DimensionMismatchError(
            "deficit_closed_form_schmidt", [basis_a.shape[0]], [u_a.shape.total]
        )
    if u_b.shape.total != basis_b.shape[0]:
        raise DimensionMismatchError(
            "deficit_closed_form_schmidt", [basis_b.shape[0]], [u_b.shape.total]
        )

    lam = schmidt.coefficients
    u_kl = basis_a.conj().T @ u_a.entries @ basis_a
    v_kl = basis_b.conj().T @ u_b.entries @ basis_b
    root = np.sqrt(np.outer(lam, lam))

    sums = {
        "global": np.sum(root * u_kl * v_kl),
        "local[A]": np.dot(lam, np.diag(u_kl)),
        "local[B]": np.dot(lam, np.diag(v_kl)),
    }
    phases = {label: principal_arg(z).require(label) for label, z in sums.items()}
    return wrap_phase(phases["global"] - phases["local[A]"] - phases["local[B]"])
