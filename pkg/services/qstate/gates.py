from __future__ import annotations

from typing import Sequence

import numpy as np
from scipy.linalg import expm

from constants.enum import OperatorKind
from services.qstate.core import tensor_all
from services.shared.exceptions import ValidationError
from services.shared.types import HilbertShape, LocalUnitarySet, Operator, StateVector

PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


def pauli_x() -> Operator:
    return Operator(HilbertShape((2,)), PAULI_X, OperatorKind.UNITARY)


def projector_phase_unitary(phi_vec: StateVector, g: float) -> Operator:
    """exp(-i g |phi><phi|) = (I - P) + e^{-ig} P."""
    p = np.outer(phi_vec.amplitudes, phi_vec.amplitudes.conj())
    eye = np.eye(phi_vec.shape.total, dtype=np.complex128)
    return Operator(phi_vec.shape, (eye - p) + np.exp(-1j * g) * p, OperatorKind.UNITARY)


def unitary_from_hamiltonian(h: Operator, t: float) -> Operator:
    """exp(-i h t), hbar = 1."""
    if h.kind not in (OperatorKind.HERMITIAN, OperatorKind.DENSITY):
        raise ValidationError(
            "Generator must be Hermitian", error_code="NOT_HERMITIAN_GENERATOR"
        )
    return Operator(h.shape, expm(-1j * t * h.entries), OperatorKind.UNITARY)


def local_evolution(hamiltonians: Sequence[Operator], t: float) -> LocalUnitarySet:
    return LocalUnitarySet(tuple(unitary_from_hamiltonian(h, t) for h in hamiltonians))


def local_hamiltonian_sum(hamiltonians: Sequence[Operator]) -> Operator:
    """H = sum_i I ⊗ .. ⊗ H_i ⊗ .. ⊗ I over the factors of ``hamiltonians``."""
    if not hamiltonians:
        raise ValidationError("No local Hamiltonians given", error_code="EMPTY_HAMILTONIANS")
    dims = [h.shape.total for h in hamiltonians]
    shape = HilbertShape(tuple(dims))
    total = np.zeros((shape.total, shape.total), dtype=np.complex128)
    for i, h in enumerate(hamiltonians):
        factors = [Operator.identity([d]) if j != i else h for j, d in enumerate(dims)]
        total += tensor_all(factors).entries
    return Operator(shape, total, OperatorKind.HERMITIAN)
