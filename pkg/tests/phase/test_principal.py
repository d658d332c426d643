import math

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from services.phase import arctan_pair, principal_arg, wrap_phase
from services.shared.exceptions import UndefinedPhaseError


class TestPrincipalArg:
    def test_third_quadrant(self):
        result = principal_arg(complex(-1.0, -2.0))
        assert result.defined
        assert result.phase == pytest.approx(-2.0344439357957027, abs=1e-12)

    def test_negative_real_axis_maps_to_pi(self):
        assert principal_arg(complex(-1.0, -0.0)).phase == math.pi
        assert principal_arg(-1.0).phase == math.pi

    def test_vanishing_amplitude_is_undefined(self):
        result = principal_arg(1e-12 + 1e-12j)
        assert not result.defined
        assert result.as_optional() is None
        with pytest.raises(UndefinedPhaseError) as exc:
            result.require("global")
        assert exc.value.error_code == "PHASE_UNDEFINED"
        assert exc.value.context["phase"] == "global"

    def test_explicit_epsilon(self):
        assert principal_arg(1e-6, epsilon_vis=1e-5).defined is False
        assert principal_arg(1e-6, epsilon_vis=1e-7).defined is True

    def test_arctan_pair_keeps_quadrant(self):
        assert arctan_pair(-2.0, -1.0).phase == pytest.approx(-2.0344439357957027)
        assert arctan_pair(-1.0, 1.0).phase == pytest.approx(-math.pi / 4)
        assert arctan_pair(1.0, 0.0).phase == pytest.approx(math.pi / 2)


class TestWrapPhase:
    @pytest.mark.parametrize(
        "raw, expected",
        [
            (0.0, 0.0),
            (math.pi, math.pi),
            (-math.pi, math.pi),
            (3 * math.pi / 2, -math.pi / 2),
            (-3 * math.pi / 2, math.pi / 2),
            (7.0, 7.0 - 2 * math.pi),
        ],
    )
    def test_known_values(self, raw, expected):
        assert wrap_phase(raw) == pytest.approx(expected, abs=1e-12)

    def test_principal_values_unchanged(self):
        for x in (-3.0, -1e-17, 0.5, math.pi):
            assert wrap_phase(x) == x

    @settings(derandomize=True, max_examples=200)
    @given(st.floats(min_value=-1e3, max_value=1e3, allow_nan=False))
    def test_range_and_congruence(self, x):
        w = wrap_phase(x)
        assert -math.pi < w <= math.pi
        turns = (x - w) / (2 * math.pi)
        assert abs(turns - round(turns)) < 1e-9
