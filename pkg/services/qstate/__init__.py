from .core import (
    expectation,
    partial_trace,
    reduced_density,
    schmidt_decompose,
    tensor_all,
    tensor_product,
)
from .fock import coherent_overlap, coherent_state, number_phase_unitary
from .gates import (
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    local_evolution,
    local_hamiltonian_sum,
    pauli_x,
    projector_phase_unitary,
    unitary_from_hamiltonian,
)

__all__ = [
    "tensor_product",
    "tensor_all",
    "partial_trace",
    "reduced_density",
    "schmidt_decompose",
    "expectation",
    "coherent_state",
    "coherent_overlap",
    "number_phase_unitary",
    "projector_phase_unitary",
    "unitary_from_hamiltonian",
    "local_evolution",
    "local_hamiltonian_sum",
    "pauli_x",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
]
