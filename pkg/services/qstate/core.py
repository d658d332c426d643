"""Dense multipartite state algebra.

Kronecker convention: the left operand is the slow index, so amplitude
index ``i`` of ``a ⊗ b`` is ``i_a * dim(b) + i_b``. Reshaping a flat
amplitude vector with ``shape.dims`` (C order) recovers one axis per
subsystem in the same order.
"""

from __future__ import annotations

import logging
from typing import Iterable, Sequence, Tuple, overload

import numpy as np

from constants.enum import OperatorKind
from services.config import numerics
from services.shared.exceptions import DimensionMismatchError, ValidationError
from services.shared.types import HilbertShape, Operator, SchmidtForm, StateVector

logger = logging.getLogger("qstate")


@overload
def tensor_product(a: StateVector, b: StateVector) -> StateVector: ...
@overload
def tensor_product(a: Operator, b: Operator) -> Operator: ...


def tensor_product(a, b):
    if isinstance(a, StateVector) and isinstance(b, StateVector):
        return StateVector(a.shape.concat(b.shape), np.kron(a.amplitudes, b.amplitudes))
    if isinstance(a, Operator) and isinstance(b, Operator):
        kind = a.kind if a.kind is b.kind else OperatorKind.GENERAL
        return Operator(a.shape.concat(b.shape), np.kron(a.entries, b.entries), kind)
    raise ValidationError(
        "tensor_product needs two states or two operators",
        error_code="MIXED_OPERANDS",
        context={"left": type(a).__name__, "right": type(b).__name__},
    )


def tensor_all(items: Sequence[StateVector] | Sequence[Operator]):
    out = items[0]
    for item in items[1:]:
        out = tensor_product(out, item)
    return out


def _split(shape: HilbertShape, keep: Iterable[int], operation: str) -> Tuple[tuple, tuple]:
    kept = shape.check_indices(keep, operation)
    traced = tuple(i for i in range(shape.n_factors) if i not in kept)
    return kept, traced


def partial_trace(rho: Operator, keep: Iterable[int]) -> Operator:
    """Reduced density operator on the ``keep`` factors (in ascending order)."""
    if rho.kind is not OperatorKind.DENSITY:
        raise ValidationError(
            "partial_trace expects a density operator",
            error_code="NOT_DENSITY",
            context={"kind": rho.kind.value},
        )
    shape = rho.shape
    kept, traced = _split(shape, keep, "partial_trace")
    n = shape.n_factors
    d_keep = int(np.prod([shape.dims[i] for i in kept]))
    d_tr = int(np.prod([shape.dims[i] for i in traced])) if traced else 1

    t = rho.entries.reshape(shape.dims + shape.dims)
    order = list(kept) + list(traced) + [n + i for i in kept] + [n + i for i in traced]
    t = t.transpose(order).reshape(d_keep, d_tr, d_keep, d_tr)
    reduced = np.einsum("ajbj->ab", t)
    reduced = 0.5 * (reduced + reduced.conj().T)
    return Operator(shape.select(kept), reduced, OperatorKind.DENSITY)


def _bipartite_matrix(
    psi: StateVector, side_a: Sequence[int], side_b: Sequence[int]
) -> np.ndarray:
    dims = psi.shape.dims
    d_a = int(np.prod([dims[i] for i in side_a]))
    d_b = int(np.prod([dims[i] for i in side_b])) if side_b else 1
    return psi.tensor.transpose(list(side_a) + list(side_b)).reshape(d_a, d_b)


def reduced_density(psi: StateVector, keep: Iterable[int]) -> Operator:
    """Reduced state of a pure state, computed from its amplitudes as M M^dagger."""
    kept, traced = _split(psi.shape, keep, "reduced_density")
    m = _bipartite_matrix(psi, kept, traced)
    rho = m @ m.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return Operator(psi.shape.select(kept), rho, OperatorKind.DENSITY)


def schmidt_decompose(psi: StateVector, cut: Iterable[int]) -> SchmidtForm:
    """Schmidt form across ``cut`` | complement via the SVD of the amplitude matrix."""
    side_a = psi.shape.check_indices(cut, "schmidt_decompose")
    side_b = tuple(i for i in range(psi.shape.n_factors) if i not in side_a)
    if not side_b:
        raise ValidationError(
            "schmidt_decompose: both sides of the cut must be nonempty",
            error_code="DEGENERATE_CUT",
            context={"cut": list(side_a), "n_factors": psi.shape.n_factors},
        )
    m = _bipartite_matrix(psi, side_a, side_b)
    u, s, vh = np.linalg.svd(m, full_matrices=False)
    coeffs = s**2
    coeffs[coeffs < numerics().schmidt_zero] = 0.0
    coeffs = coeffs / coeffs.sum()
    logger.debug("[SCHMIDT] cut=%s rank=%d", side_a, int(np.count_nonzero(coeffs)))
    return SchmidtForm(
        coefficients=coeffs,
        basis_a=u,
        basis_b=vh.T,
        shape_a=psi.shape.select(side_a),
        shape_b=psi.shape.select(side_b),
    )


def expectation(op: Operator, rho: Operator) -> complex:
    """Tr[rho op] for operators on the same shape."""
    if op.shape.dims != rho.shape.dims:
        raise DimensionMismatchError("expectation", rho.shape.dims, op.shape.dims)
    return complex(np.einsum("ij,ji->", rho.entries, op.entries))
