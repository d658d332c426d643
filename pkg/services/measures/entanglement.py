from __future__ import annotations

import logging

import numpy as np
from scipy.special import entr

from constants.enum import OperatorKind
from services.config import numerics
from services.qstate.gates import PAULI_Y
from services.shared.exceptions import DimensionMismatchError, ValidationError
from services.shared.types import Operator, SchmidtForm

logger = logging.getLogger("deficit")

_SPIN_FLIP = np.kron(PAULI_Y, PAULI_Y)


def _density_spectrum(rho: Operator) -> np.ndarray:
    if rho.kind is not OperatorKind.DENSITY:
        raise ValidationError(
            "Entanglement measures need a density operator",
            error_code="NOT_DENSITY",
            context={"kind": rho.kind.value},
        )
    evals = np.linalg.eigvalsh(rho.entries)
    if np.min(evals) < -numerics().psd_tol:
        raise ValidationError(
            "Density operator has a negative eigenvalue",
            error_code="NOT_POSITIVE",
            context={"min_eigenvalue": float(np.min(evals))},
        )
    return np.clip(evals, 0.0, None)


def entanglement_entropy(rho: Operator) -> float:
    """Von Neumann entropy -Tr(rho ln rho) in nats."""
    return float(np.sum(entr(_density_spectrum(rho))))


def schmidt_entropy(schmidt: SchmidtForm) -> float:
    """-sum lambda ln lambda of a Schmidt spectrum, in nats."""
    return float(np.sum(entr(schmidt.coefficients)))


def wootters_concurrence(rho: Operator) -> float:
    """Two-qubit concurrence max{0, mu_1 - mu_2 - mu_3 - mu_4}.

    The mu_i are the singular values of sqrt(rho) (Y⊗Y) sqrt(rho)^*, i.e. the
    square roots of the spectrum of rho (Y⊗Y) rho^* (Y⊗Y), which avoids taking
    square roots of rounding noise on a non-normal product.
    """
    if rho.shape.total != 4:
        raise DimensionMismatchError("wootters_concurrence", [4], [rho.shape.total])
    _density_spectrum(rho)
    evals, vecs = np.linalg.eigh(rho.entries)
    evals[evals < numerics().spectrum_floor] = 0.0
    root = (vecs * np.sqrt(evals)) @ vecs.conj().T
    mu = np.linalg.svd(root @ _SPIN_FLIP @ root.conj(), compute_uv=False)
    mu = np.sort(mu)[::-1]
    return float(max(0.0, mu[0] - mu[1] - mu[2] - mu[3]))
