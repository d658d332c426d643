import math

import numpy as np
import pytest

from services.oracle.truncation import truncation_for_tolerance
from services.qstate import (
    coherent_overlap,
    coherent_state,
    local_evolution,
    local_hamiltonian_sum,
    number_phase_unitary,
    projector_phase_unitary,
    unitary_from_hamiltonian,
)
from services.shared.exceptions import TruncationError, ValidationError
from services.shared.types import FockSpec, Operator, StateVector
from utils.random_states import random_hermitian


class TestCoherentState:
    def test_vacuum(self):
        psi = coherent_state(0.0, FockSpec(n_max=5, tail_bound=0.0))
        assert np.allclose(psi.amplitudes, [1, 0, 0, 0, 0, 0])

    def test_poisson_statistics(self):
        mean = 2.0
        spec = truncation_for_tolerance(mean, 1e-12)
        psi = coherent_state(math.sqrt(mean) * np.exp(0.3j), spec)
        probs = np.abs(psi.amplitudes) ** 2
        n = np.arange(spec.dimension)
        avg = float(np.sum(n * probs))
        var = float(np.sum(n**2 * probs)) - avg**2
        assert avg == pytest.approx(mean, abs=1e-9)
        assert var / avg == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize("theta", [0.0, math.pi / 3, math.pi])
    def test_overlap_matches_analytic(self, theta):
        alpha = math.sqrt(2.0) * np.exp(1j * math.pi / 4)
        beta = 1.0
        spec = truncation_for_tolerance(2.0, 1e-12)
        a, b = coherent_state(alpha, spec), coherent_state(beta, spec)
        numeric = a.inner(number_phase_unitary(theta, spec).apply(b))
        assert abs(numeric - coherent_overlap(alpha, beta, theta)) < 1e-8

    def test_large_photon_number_stays_finite(self):
        mean = 1500.0
        spec = truncation_for_tolerance(mean, 1e-12)
        psi = coherent_state(math.sqrt(mean) * np.exp(0.7j), spec)
        assert np.all(np.isfinite(psi.amplitudes))
        probs = np.abs(psi.amplitudes) ** 2
        n = np.arange(spec.dimension)
        assert float(np.sum(probs)) == pytest.approx(1.0, abs=1e-12)
        assert float(np.sum(n * probs)) == pytest.approx(mean, rel=1e-9)
        peak = int(round(mean))
        assert np.angle(psi.amplitudes[peak]) == pytest.approx(
            float(np.angle(np.exp(0.7j * peak))), abs=1e-6
        )

    def test_cutoff_below_the_distribution_rejected(self):
        with pytest.raises(TruncationError) as exc:
            coherent_state(1000.0, FockSpec(n_max=5, tail_bound=0.5))
        assert exc.value.error_code == "EMPTY_TRUNCATION"


class TestPhaseGates:
    def test_projector_phase_on_excited_level(self):
        u = projector_phase_unitary(StateVector.basis((2,), (1,)), math.pi / 2)
        assert np.allclose(u.entries, np.diag([1.0, -1j]))

    def test_number_phase_is_diagonal(self):
        u = number_phase_unitary(0.5, FockSpec(n_max=3, tail_bound=0.0))
        assert np.allclose(np.diag(u.entries), np.exp(-0.5j * np.arange(4)))

    def test_unitary_from_hamiltonian(self, rng):
        h = random_hermitian(3, rng)
        u = unitary_from_hamiltonian(h, 0.7)
        evals, vecs = np.linalg.eigh(h.entries)
        expected = vecs @ np.diag(np.exp(-0.7j * evals)) @ vecs.conj().T
        assert np.allclose(u.entries, expected, atol=1e-12)

    def test_non_hermitian_generator_rejected(self):
        with pytest.raises(ValidationError):
            unitary_from_hamiltonian(Operator.from_matrix(np.array([[0, 1], [0, 0]]), (2,)), 1.0)

    def test_local_hamiltonian_sum_generates_local_evolution(self, rng):
        hs = [random_hermitian(2, rng), random_hermitian(3, rng)]
        total = unitary_from_hamiltonian(local_hamiltonian_sum(hs), 0.4)
        locals_ = local_evolution(hs, 0.4)
        product = np.kron(locals_.unitaries[0].entries, locals_.unitaries[1].entries)
        assert np.allclose(total.entries, product, atol=1e-12)
