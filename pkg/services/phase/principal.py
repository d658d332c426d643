"""Principal-value phases.

Every Arg / tan^-1[N/D] is taken as the two-argument arctangent of (N, D)
and reported in (-pi, pi]. The ratio form loses the quadrant.
"""

from __future__ import annotations

import math
from typing import Optional

from services.config import numerics
from services.shared.types import PhaseResult


def wrap_phase(x: float) -> float:
    """Reduce ``x`` into (-pi, pi]; principal values are returned unchanged."""
    if -math.pi < x <= math.pi:
        return x
    r = math.fmod(x + math.pi, 2.0 * math.pi)
    if r <= 0.0:
        r += 2.0 * math.pi
    return r - math.pi


def principal_arg(z: complex, epsilon_vis: Optional[float] = None) -> PhaseResult:
    eps = numerics().epsilon_vis if epsilon_vis is None else epsilon_vis
    z = complex(z)
    phase = math.atan2(z.imag, z.real)
    if phase == -math.pi:
        phase = math.pi
    visibility = abs(z)
    return PhaseResult(phase=phase, visibility=visibility, defined=visibility >= eps)


def arctan_pair(numerator: float, denominator: float) -> PhaseResult:
    """Quadrant-aware tan^-1[numerator / denominator]."""
    return principal_arg(complex(denominator, numerator))
