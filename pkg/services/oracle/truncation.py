from __future__ import annotations

import logging
import math

import numpy as np
from scipy.stats import poisson

from services.shared.exceptions import TruncationError, ValidationError
from services.shared.types import FockSpec

logger = logging.getLogger("deficit.oracle")

MAX_FOCK_LEVEL = 20_000


def poisson_tail(n_max: int, mean_photon: float) -> float:
    """P(N > n_max) for a Poisson number distribution."""
    return float(poisson.sf(n_max, mean_photon)) if mean_photon > 0 else 0.0


def truncation_for_tolerance(mean_photon: float, tail: float) -> FockSpec:
    """Smallest n_max whose discarded Poisson probability is below ``tail``."""
    if not (0.0 < tail < 1.0):
        raise ValidationError(
            "tail must lie in (0, 1)", error_code="BAD_TAIL", context={"tail": tail}
        )
    if mean_photon < 0.0 or not math.isfinite(mean_photon):
        raise ValidationError(
            "mean photon number must be finite and nonnegative",
            error_code="BAD_MEAN_PHOTON",
            context={"mean_photon": mean_photon},
        )
    if mean_photon == 0.0:
        return FockSpec(n_max=0, tail_bound=0.0)

    upper = int(mean_photon + 40.0 * math.sqrt(mean_photon) + 64)
    while upper <= MAX_FOCK_LEVEL:
        levels = np.arange(upper + 1)
        tails = poisson.sf(levels, mean_photon)
        hits = np.flatnonzero(tails < tail)
        if hits.size:
            n_max = int(hits[0])
            logger.debug(
                "[TRUNC] mean=%.6g tail<%.1e -> n_max=%d (achieved %.3e)",
                mean_photon,
                tail,
                n_max,
                tails[n_max],
            )
            return FockSpec(n_max=n_max, tail_bound=float(tails[n_max]))
        upper *= 2
    raise TruncationError(
        "No Fock cutoff meets the requested tail",
        error_code="TRUNCATION_UNREACHABLE",
        context={"mean_photon": mean_photon, "tail": tail, "max_level": MAX_FOCK_LEVEL},
    )
