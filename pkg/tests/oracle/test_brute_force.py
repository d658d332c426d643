import math

import numpy as np
import pytest

from services.oracle import oracle_deficit, oracle_evolved, oracle_reduced
from services.phase import apply_locals, phase_deficit
from services.qstate import reduced_density
from services.shared.exceptions import DimensionMismatchError
from tests.factories import SHAPES, LocalsFactory, StateFactory


class TestCrossPath:
    @pytest.mark.parametrize("dims", SHAPES)
    def test_product_states_vanish_on_both_paths(self, rng, dims):
        for _ in range(40):
            psi = StateFactory.product(dims, rng)
            locals_ = LocalsFactory.random(dims, rng)
            for report in (phase_deficit(psi, locals_), oracle_deficit(psi, locals_)):
                assert report.defined
                assert abs(report.deficit) < 1e-10

    @pytest.mark.parametrize("dims", SHAPES)
    def test_engine_and_oracle_agree(self, rng, dims):
        for i in range(40):
            make = StateFactory.entangled if i % 2 else StateFactory.product
            psi = make(dims, rng)
            locals_ = LocalsFactory.random(dims, rng)
            engine = phase_deficit(psi, locals_)
            oracle = oracle_deficit(psi, locals_)
            assert engine.undefined_phases == oracle.undefined_phases
            if not engine.defined:
                continue
            assert abs(math.remainder(engine.deficit - oracle.deficit, 2 * math.pi)) < 1e-10
            for a, b in zip(engine.local_phases, oracle.local_phases, strict=True):
                assert abs(math.remainder(a.phase - b.phase, 2 * math.pi)) < 1e-10


    def test_evolved_states_agree(self, rng):
        psi = StateFactory.entangled((2, 3, 2), rng)
        locals_ = LocalsFactory.random((2, 3, 2), rng)
        assert np.allclose(
            oracle_evolved(psi, locals_).amplitudes,
            apply_locals(psi, locals_).amplitudes,
            atol=1e-12,
        )

    @pytest.mark.parametrize("keep", [[0], [1], [0, 2], [2, 0], [1, 2]])
    def test_reduced_states_agree(self, rng, keep):
        psi = StateFactory.entangled((2, 3, 2), rng)
        assert np.allclose(
            oracle_reduced(psi, keep).entries, reduced_density(psi, keep).entries, atol=1e-12
        )

    def test_product_state_gives_zero(self, rng):
        psi = StateFactory.product((4, 4, 4), rng)
        report = oracle_deficit(psi, LocalsFactory.random((4, 4, 4), rng))
        assert abs(report.deficit) < 1e-10
        assert not report.entangled_witnessed

    def test_undefined_global_phase(self):
        psi = StateFactory.weighted(0.5)
        locals_ = LocalsFactory.diagonal((0.0, math.pi / 2), (0.0, math.pi / 2))
        report = oracle_deficit(psi, locals_)
        assert report.undefined_phases == ("global",)
        assert report.deficit is None

    def test_shape_mismatch(self, rng):
        psi = StateFactory.entangled((2, 3), rng)
        with pytest.raises(DimensionMismatchError):
            oracle_deficit(psi, LocalsFactory.random((3, 2), rng))
