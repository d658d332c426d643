"""Truncated single-mode Fock space: coherent states and number-phase shifts."""

from __future__ import annotations

import cmath
import logging

import numpy as np
from scipy.stats import poisson

from constants.enum import OperatorKind
from services.shared.exceptions import TruncationError
from services.shared.types import FockSpec, HilbertShape, Operator, StateVector

logger = logging.getLogger("qstate")


def coherent_state(alpha: complex, spec: FockSpec) -> StateVector:
    """|alpha> on Fock levels 0..n_max, renormalized after truncation.

    Moduli are sqrt of the Poisson weights e^{-|a|^2} |a|^{2n} / n!, taken
    from the log pmf so large photon numbers never overflow.
    """
    alpha = complex(alpha)
    dim = spec.dimension
    mean = abs(alpha) ** 2
    n = np.arange(dim)
    if mean == 0.0:
        moduli = (n == 0).astype(np.float64)
    else:
        moduli = np.exp(0.5 * poisson.logpmf(n, mean))
    amps = moduli * np.exp(1j * cmath.phase(alpha) * n)
    kept = float(np.linalg.norm(amps))
    logger.debug(
        "[FOCK] coherent |a|^2=%.6g n_max=%d kept_norm=%.17g tail_bound=%.3e",
        mean,
        spec.n_max,
        kept,
        spec.tail_bound,
    )
    if kept == 0.0:
        raise TruncationError(
            "Fock cutoff keeps no weight of the coherent state",
            error_code="EMPTY_TRUNCATION",
            context={"n_max": spec.n_max, "mean_photon": mean},
        )
    return StateVector(HilbertShape((dim,)), amps / kept)


def number_phase_unitary(theta: float, spec: FockSpec) -> Operator:
    """exp(-i theta N) on the truncated mode."""
    n = np.arange(spec.dimension)
    phases = np.diag(np.exp(-1j * theta * n))
    return Operator(HilbertShape((spec.dimension,)), phases, OperatorKind.UNITARY)


def coherent_overlap(alpha: complex, beta: complex, theta: float = 0.0) -> complex:
    """Analytic <alpha| exp(-i theta N) |beta> of untruncated coherent states."""
    alpha, beta = complex(alpha), complex(beta)
    exponent = -0.5 * abs(alpha) ** 2 - 0.5 * abs(beta) ** 2
    return cmath.exp(exponent + alpha.conjugate() * beta * cmath.exp(-1j * theta))
