import time

import numpy as np
import pytest

from utils.concurrency import ordered_map
from utils.random_states import make_rng, random_state, random_unitary


class TestOrderedMap:
    @pytest.mark.parametrize("workers", [1, 2, 8])
    def test_keeps_input_order(self, workers):
        def slow_square(x):
            time.sleep(0.001 * (5 - x % 5))
            return x * x

        assert ordered_map(slow_square, list(range(20)), workers) == [x * x for x in range(20)]

    def test_empty_input(self):
        assert ordered_map(abs, [], 4) == []

    def test_errors_propagate(self):
        with pytest.raises(ZeroDivisionError):
            ordered_map(lambda x: 1 / x, [1, 0, 2], 2)


class TestRandomStates:
    def test_same_seed_same_state(self):
        a = random_state((2, 3), make_rng(4))
        b = random_state((2, 3), make_rng(4))
        assert np.array_equal(a.amplitudes, b.amplitudes)

    @pytest.mark.parametrize("dim", [1, 2, 5])
    def test_unitary(self, rng, dim):
        u = random_unitary(dim, rng).entries
        assert np.allclose(u.conj().T @ u, np.eye(dim), atol=1e-12)
