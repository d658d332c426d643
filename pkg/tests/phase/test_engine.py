import math

import numpy as np
import pytest

from constants.enum import OperatorKind
from services.phase import (
    apply_locals,
    deficit_closed_form_schmidt,
    dynamical_deficit,
    dynamical_phase,
    geometric_phase,
    pancharatnam_mixed,
    pancharatnam_pure,
    phase_deficit,
)
from services.qstate import projector_phase_unitary, schmidt_decompose
from services.shared.exceptions import DimensionMismatchError, ValidationError
from services.shared.types import LocalUnitarySet, Operator, StateVector
from tests.factories import SHAPES, LocalsFactory, StateFactory
from utils.random_states import random_hermitian, random_unitary


def _excited_phase(g: float) -> Operator:
    return projector_phase_unitary(StateVector.basis((2,), (1,)), g)


class TestPancharatnam:
    def test_pure_phase_of_global_phase_shift(self, rng):
        psi = StateFactory.entangled((2, 3), rng)
        result = pancharatnam_pure(psi, psi.with_global_phase(0.7))
        assert result.phase == pytest.approx(0.7, abs=1e-12)
        assert result.visibility == pytest.approx(1.0, abs=1e-12)

    def test_orthogonal_states_undefined(self):
        result = pancharatnam_pure(StateVector.basis((2,), (0,)), StateVector.basis((2,), (1,)))
        assert not result.defined

    def test_mixed_phase_of_maximally_mixed_qubit(self):
        rho = Operator.from_matrix(np.eye(2) / 2, (2,), OperatorKind.DENSITY)
        assert pancharatnam_mixed(rho, _excited_phase(math.pi / 2)).phase == pytest.approx(
            -math.pi / 4
        )

    def test_mixed_phase_of_pure_state_matches_pure(self, rng):
        psi = StateFactory.entangled((3,), rng)
        u = random_unitary(3, rng)
        mixed = pancharatnam_mixed(Operator.projector(psi), u)
        pure = pancharatnam_pure(psi, u.apply(psi))
        assert mixed.phase == pytest.approx(pure.phase, abs=1e-12)

    def test_mixed_phase_dimension_check(self):
        rho = Operator.from_matrix(np.eye(2) / 2, (2,), OperatorKind.DENSITY)
        with pytest.raises(DimensionMismatchError):
            pancharatnam_mixed(rho, Operator.identity((3,)))


class TestPhaseDeficit:
    @pytest.mark.parametrize("dims", SHAPES)
    def test_product_states_give_zero(self, rng, dims):
        for _ in range(10):
            psi = StateFactory.product(dims, rng)
            report = phase_deficit(psi, LocalsFactory.random(dims, rng))
            assert report.defined
            assert abs(report.deficit) < 1e-10
            assert not report.entangled_witnessed

    def test_weighted_state_deficit(self):
        psi = StateFactory.weighted(0.75)
        locals_ = LocalUnitarySet((_excited_phase(math.pi / 2), _excited_phase(math.pi / 2)))
        report = phase_deficit(psi, locals_)
        assert report.deficit == pytest.approx(2 * math.atan(1 / 3), abs=1e-12)
        assert report.entangled_witnessed

    def test_undefined_global_phase(self):
        """Equal weights with g1 + g2 = pi cancel the global transition amplitude."""
        psi = StateFactory.weighted(0.5)
        locals_ = LocalUnitarySet((_excited_phase(math.pi / 2), _excited_phase(math.pi / 2)))
        report = phase_deficit(psi, locals_)
        assert report.deficit is None
        assert report.undefined_phases == ("global",)
        assert not report.entangled_witnessed

    def test_global_phase_invariance(self, rng):
        psi = StateFactory.entangled((2, 3), rng)
        locals_ = LocalsFactory.random((2, 3), rng)
        a = phase_deficit(psi, locals_)
        b = phase_deficit(psi.with_global_phase(1.234), locals_)
        assert b.deficit == pytest.approx(a.deficit, abs=1e-12)

    def test_unwrapped_value_is_kept(self, rng):
        psi = StateFactory.entangled((2, 2), rng)
        report = phase_deficit(psi, LocalsFactory.random((2, 2), rng))
        turns = (report.deficit_unwrapped - report.deficit) / (2 * math.pi)
        assert abs(turns - round(turns)) < 1e-12

    def test_custom_witness_tolerance(self):
        psi = StateFactory.weighted(0.75)
        locals_ = LocalUnitarySet((_excited_phase(math.pi / 2), _excited_phase(math.pi / 2)))
        assert not phase_deficit(psi, locals_, witness_tolerance=1.0).entangled_witnessed

    def test_locals_must_match_shape(self, rng):
        psi = StateFactory.entangled((2, 3), rng)
        with pytest.raises(DimensionMismatchError):
            phase_deficit(psi, LocalsFactory.random((3, 2), rng))

    def test_apply_locals_matches_kron(self, rng):
        psi = StateFactory.entangled((2, 3, 2), rng)
        locals_ = LocalsFactory.random((2, 3, 2), rng)
        ops = [u.entries for u in locals_.unitaries]
        full = np.kron(np.kron(ops[0], ops[1]), ops[2])
        assert np.allclose(apply_locals(psi, locals_).amplitudes, full @ psi.amplitudes)


class TestSchmidtClosedForm:
    def test_matches_engine(self, rng):
        for _ in range(100):
            dims = tuple(int(d) for d in rng.integers(2, 9, size=2))
            psi = StateFactory.entangled(dims, rng)
            u_a, u_b = random_unitary(dims[0], rng), random_unitary(dims[1], rng)
            closed = deficit_closed_form_schmidt(schmidt_decompose(psi, [0]), u_a, u_b)
            engine = phase_deficit(psi, LocalUnitarySet((u_a, u_b))).deficit
            assert abs(math.remainder(closed - engine, 2 * math.pi)) < 1e-9

    def test_dimension_check(self, rng):
        schmidt = schmidt_decompose(StateFactory.entangled((2, 3), rng), [0])
        with pytest.raises(DimensionMismatchError):
            deficit_closed_form_schmidt(schmidt, Operator.identity((3,)), Operator.identity((3,)))


class TestDynamicalPhase:
    def test_additivity(self, rng):
        for _ in range(100):
            dims = tuple(int(d) for d in rng.integers(2, 5, size=2))
            hs = [random_hermitian(d, rng) for d in dims]
            psi = StateFactory.entangled(dims, rng)
            assert abs(dynamical_deficit(psi, hs, float(rng.uniform(0, 2)))) < 1e-10

    def test_energy_eigenstate(self):
        h = Operator.from_matrix(np.diag([0.0, 2.0]), (2,), OperatorKind.HERMITIAN)
        assert dynamical_phase(h, StateVector.basis((2,), (1,)), 0.5) == pytest.approx(-1.0)

    def test_requires_hermitian_generator(self):
        with pytest.raises(ValidationError):
            dynamical_phase(Operator.identity((2,)), StateVector.basis((2,), (0,)), 1.0)

    def test_geometric_phase_of_eigenstate_vanishes(self):
        """An eigenstate only picks up its dynamical phase."""
        h = Operator.from_matrix(np.diag([0.0, 2.0]), (2,), OperatorKind.HERMITIAN)
        psi = StateVector.basis((2,), (1,))
        evolved = psi.with_global_phase(-1.0)
        total = pancharatnam_pure(psi, evolved)
        assert geometric_phase(total, dynamical_phase(h, psi, 0.5)) == pytest.approx(0.0, abs=1e-12)
