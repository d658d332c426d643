"""Brute-force ground truth for phases and the deficit.

Everything here works on dense matrices: the full local unitary is a
Kronecker product, reduced states come from an explicit index trace of
|psi><psi|, and transition amplitudes are plain traces. The only code
shared with the phase engine is ``principal_arg``.
"""

from __future__ import annotations

from dataclasses import dataclass
import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from constants.enum import OperatorKind
from services.config import numerics
from services.phase.principal import principal_arg
from services.shared.exceptions import DimensionMismatchError
from services.shared.types import (
    DeficitReport,
    HilbertShape,
    LocalUnitarySet,
    Operator,
    PhaseResult,
    StateVector,
)

logger = logging.getLogger("deficit.oracle")


@dataclass(frozen=True)
class OracleAmplitudes:
    global_amplitude: complex
    local_traces: Tuple[complex, ...]


def _explicit_partial_trace(
    rho: np.ndarray, dims: Sequence[int], keep: Sequence[int]
) -> np.ndarray:
    n = len(dims)
    tensor = rho.reshape(tuple(dims) + tuple(dims))
    for axis in sorted(set(range(n)) - set(keep), reverse=True):
        current = tensor.ndim // 2
        tensor = np.trace(tensor, axis1=axis, axis2=axis + current)
    kept = int(np.prod([dims[i] for i in sorted(keep)]))
    return tensor.reshape(kept, kept)


def _wrap(raw: float) -> float:
    r = math.remainder(raw, 2.0 * math.pi)
    return math.pi if r == -math.pi else r


def _full_unitary(local_set: LocalUnitarySet) -> np.ndarray:
    full = np.ones((1, 1), dtype=np.complex128)
    for op in local_set.unitaries:
        full = np.kron(full, op.entries)
    return full


def oracle_reduced(psi: StateVector, keep: Sequence[int]) -> Operator:
    """Reduced density operator of ``psi`` on the ``keep`` factors via |psi><psi|."""
    picked = psi.shape.check_indices(keep, "oracle_reduced")
    rho = np.outer(psi.amplitudes, psi.amplitudes.conj())
    reduced = _explicit_partial_trace(rho, psi.shape.dims, picked)
    reduced = 0.5 * (reduced + reduced.conj().T)
    return Operator(psi.shape.select(picked), reduced, OperatorKind.DENSITY)


def oracle_amplitudes(psi: StateVector, local_set: LocalUnitarySet) -> OracleAmplitudes:
    """Tr[rho U_1 ⊗ .. ⊗ U_N] and every Tr[rho_i U_i], by dense products."""
    local_dims = [op.shape.total for op in local_set.unitaries]
    if tuple(local_dims) != psi.shape.dims:
        raise DimensionMismatchError("oracle_amplitudes", psi.shape.dims, local_dims)

    rho = np.outer(psi.amplitudes, psi.amplitudes.conj())
    global_amplitude = complex(np.trace(rho @ _full_unitary(local_set)))
    local_traces: List[complex] = []
    for i, op in enumerate(local_set.unitaries):
        rho_i = _explicit_partial_trace(rho, psi.shape.dims, [i])
        local_traces.append(complex(np.trace(rho_i @ op.entries)))
    return OracleAmplitudes(global_amplitude, tuple(local_traces))


def oracle_evolved(psi: StateVector, local_set: LocalUnitarySet) -> StateVector:
    """(U_1 ⊗ .. ⊗ U_N)|psi> as a dense matrix-vector product."""
    local_set.check_matches(psi.shape)
    return StateVector(HilbertShape(psi.shape.dims), _full_unitary(local_set) @ psi.amplitudes)


def oracle_deficit(
    psi: StateVector, local_set: LocalUnitarySet, witness_tolerance: Optional[float] = None
) -> DeficitReport:
    tol = numerics().witness_tolerance if witness_tolerance is None else witness_tolerance
    amps = oracle_amplitudes(psi, local_set)
    global_phase: PhaseResult = principal_arg(amps.global_amplitude)
    local_phases = tuple(principal_arg(z) for z in amps.local_traces)

    undefined = tuple(
        (["global"] if not global_phase.defined else [])
        + [f"local[{i}]" for i, p in enumerate(local_phases) if not p.defined]
    )
    if undefined:
        logger.debug("[ORACLE] undefined constituent phases: %s", undefined)
        return DeficitReport(
            global_phase=global_phase,
            local_phases=local_phases,
            deficit=None,
            deficit_unwrapped=None,
            entangled_witnessed=False,
            witness_tolerance=tol,
            undefined_phases=undefined,
        )

    raw = global_phase.phase - float(np.sum([p.phase for p in local_phases]))
    deficit = _wrap(raw)
    return DeficitReport(
        global_phase=global_phase,
        local_phases=local_phases,
        deficit=deficit,
        deficit_unwrapped=raw,
        entangled_witnessed=abs(deficit) > tol,
        witness_tolerance=tol,
    )
