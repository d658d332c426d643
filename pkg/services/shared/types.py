from __future__ import annotations

from dataclasses import dataclass, field
import math
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from constants.enum import Classification, OperatorKind
from services.config import get_service_config, numerics
from services.shared.exceptions import (
    DimensionMismatchError,
    StateValidationError,
    UndefinedPhaseError,
    ValidationError,
)


def _frozen(array: np.ndarray) -> np.ndarray:
    out = np.array(array, dtype=np.complex128, copy=True)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class HilbertShape:
    """Ordered subsystem dimensions; the left factor is the slow Kronecker index."""

    dims: Tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if not dims:
            raise StateValidationError("HilbertShape needs at least one factor", "EMPTY_SHAPE")
        if any(d < 1 for d in dims):
            raise StateValidationError(
                "Subsystem dimensions must be positive",
                "NONPOSITIVE_DIMENSION",
                context={"dims": list(dims)},
            )
        object.__setattr__(self, "dims", dims)

    @property
    def total(self) -> int:
        return math.prod(self.dims)

    @property
    def n_factors(self) -> int:
        return len(self.dims)

    def concat(self, other: HilbertShape) -> HilbertShape:
        return HilbertShape(self.dims + other.dims)

    def select(self, indices: Iterable[int]) -> HilbertShape:
        return HilbertShape(tuple(self.dims[i] for i in indices))

    def check_indices(self, indices: Iterable[int], operation: str) -> Tuple[int, ...]:
        picked = tuple(sorted(set(int(i) for i in indices)))
        if not picked:
            raise ValidationError(
                f"{operation}: index set cannot be empty", error_code="EMPTY_INDEX_SET"
            )
        bad = [i for i in picked if i < 0 or i >= self.n_factors]
        if bad:
            raise ValidationError(
                f"{operation}: subsystem index out of range",
                error_code="INDEX_OUT_OF_RANGE",
                context={"indices": bad, "n_factors": self.n_factors},
            )
        return picked


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized pure state over a factorized Hilbert space."""

    shape: HilbertShape
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = _frozen(np.ravel(self.amplitudes))
        if amps.shape[0] != self.shape.total:
            raise DimensionMismatchError("StateVector", [self.shape.total], [amps.shape[0]])
        if not np.all(np.isfinite(amps)):
            raise StateValidationError(
                "State vector has non-finite amplitudes", "NON_FINITE_AMPLITUDES"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > numerics().norm_tol:
            raise StateValidationError(
                "State vector is not normalized",
                "STATE_NOT_NORMALIZED",
                context={"norm": norm},
            )
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(
        cls,
        amplitudes: Sequence[complex] | np.ndarray,
        dims: Sequence[int],
        normalize: bool = False,
    ) -> StateVector:
        amps = np.asarray(amplitudes, dtype=np.complex128).ravel()
        if normalize:
            norm = np.linalg.norm(amps)
            if norm == 0.0:
                raise StateValidationError("Cannot normalize the zero vector", "ZERO_VECTOR")
            amps = amps / norm
        return cls(HilbertShape(tuple(dims)), amps)

    @classmethod
    def basis(cls, dims: Sequence[int], digits: Sequence[int]) -> StateVector:
        """Computational basis ket |digits> over ``dims``."""
        shape = HilbertShape(tuple(dims))
        if len(digits) != shape.n_factors:
            raise DimensionMismatchError("StateVector.basis", [shape.n_factors], [len(digits)])
        amps = np.zeros(shape.total, dtype=np.complex128)
        amps[np.ravel_multi_index(tuple(digits), shape.dims)] = 1.0
        return cls(shape, amps)

    @property
    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape(self.shape.dims)

    def inner(self, other: StateVector) -> complex:
        if self.shape.dims != other.shape.dims:
            raise DimensionMismatchError("inner product", self.shape.dims, other.shape.dims)
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def with_global_phase(self, phi: float) -> StateVector:
        return StateVector(self.shape, np.exp(1j * phi) * self.amplitudes)


@dataclass(frozen=True, eq=False)
class Operator:
    """Square matrix over a factorized Hilbert space, tagged with its kind."""

    shape: HilbertShape
    entries: np.ndarray
    kind: OperatorKind = OperatorKind.GENERAL

    def __post_init__(self):
        mat = _frozen(self.entries)
        n = self.shape.total
        if mat.shape != (n, n):
            raise DimensionMismatchError("Operator", [n, n], list(mat.shape))
        if not np.all(np.isfinite(mat)):
            raise StateValidationError("Operator has non-finite entries", "NON_FINITE_ENTRIES")
        object.__setattr__(self, "entries", mat)
        object.__setattr__(self, "kind", OperatorKind(self.kind))
        self._check_kind()

    def _check_kind(self) -> None:
        cfg = numerics()
        mat = self.entries
        if self.kind is OperatorKind.UNITARY:
            dev = float(np.max(np.abs(mat.conj().T @ mat - np.eye(mat.shape[0]))))
            if dev >= cfg.unitary_tol:
                raise StateValidationError(
                    "Operator is not unitary", "NOT_UNITARY", context={"max_deviation": dev}
                )
        if self.kind in (OperatorKind.HERMITIAN, OperatorKind.DENSITY):
            dev = float(np.max(np.abs(mat - mat.conj().T)))
            if dev >= cfg.hermitian_tol:
                raise StateValidationError(
                    "Operator is not Hermitian", "NOT_HERMITIAN", context={"max_deviation": dev}
                )
        if self.kind is OperatorKind.DENSITY:
            tr = complex(np.trace(mat))
            if abs(tr - 1.0) > cfg.trace_tol:
                raise StateValidationError(
                    "Density operator trace is not 1", "BAD_TRACE", context={"trace": str(tr)}
                )
            low = float(np.min(np.linalg.eigvalsh(mat)))
            if low < -cfg.psd_tol:
                raise StateValidationError(
                    "Density operator has a negative eigenvalue",
                    "NOT_POSITIVE",
                    context={"min_eigenvalue": low},
                )

    @classmethod
    def identity(cls, dims: Sequence[int]) -> Operator:
        shape = HilbertShape(tuple(dims))
        return cls(shape, np.eye(shape.total), OperatorKind.UNITARY)

    @classmethod
    def from_matrix(
        cls, matrix: np.ndarray, dims: Sequence[int], kind: OperatorKind = OperatorKind.GENERAL
    ) -> Operator:
        return cls(HilbertShape(tuple(dims)), np.asarray(matrix), kind)

    @classmethod
    def projector(cls, state: StateVector) -> Operator:
        """|psi><psi| as a density operator."""
        amps = state.amplitudes
        return cls(state.shape, np.outer(amps, amps.conj()), OperatorKind.DENSITY)

    def apply(self, state: StateVector) -> StateVector:
        if self.shape.dims != state.shape.dims:
            raise DimensionMismatchError("Operator.apply", self.shape.dims, state.shape.dims)
        out = self.entries @ state.amplitudes
        if self.kind is OperatorKind.UNITARY:
            return StateVector(state.shape, out)
        return StateVector.from_amplitudes(out, state.shape.dims, normalize=True)

    def expectation(self, state: StateVector) -> complex:
        return complex(np.vdot(state.amplitudes, self.entries @ state.amplitudes))


@dataclass(frozen=True, eq=False)
class SchmidtForm:
    """Descending Schmidt coefficients with orthonormal columns for both factors."""

    coefficients: np.ndarray
    basis_a: np.ndarray
    basis_b: np.ndarray
    shape_a: HilbertShape
    shape_b: HilbertShape

    def __post_init__(self):
        coeffs = np.array(self.coefficients, dtype=np.float64, copy=True)
        coeffs.flags.writeable = False
        if np.any(coeffs < 0.0) or np.any(np.diff(coeffs) > 0.0):
            raise StateValidationError(
                "Schmidt coefficients must be nonnegative and descending", "BAD_SCHMIDT_ORDER"
            )
        total = float(np.sum(coeffs))
        if abs(total - 1.0) > 1e-10:
            raise StateValidationError(
                "Schmidt coefficients must sum to 1", "BAD_SCHMIDT_SUM", context={"sum": total}
            )
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "basis_a", _frozen(self.basis_a))
        object.__setattr__(self, "basis_b", _frozen(self.basis_b))

    @property
    def rank(self) -> int:
        return int(np.count_nonzero(self.coefficients))

    def reconstruct(self) -> StateVector:
        """sum_n sqrt(lambda_n) |a_n>|b_n> over shape_a + shape_b."""
        root = np.sqrt(self.coefficients)
        amps = np.einsum("n,in,jn->ij", root, self.basis_a, self.basis_b).ravel()
        return StateVector(self.shape_a.concat(self.shape_b), amps)


@dataclass(frozen=True)
class FockSpec:
    n_max: int
    tail_bound: float

    def __post_init__(self):
        if self.n_max < 0:
            raise ValidationError("n_max must be >= 0", error_code="BAD_FOCK_CUTOFF")
        if not (0.0 <= self.tail_bound < 1.0):
            raise ValidationError("tail_bound must lie in [0, 1)", error_code="BAD_TAIL_BOUND")

    @property
    def dimension(self) -> int:
        return self.n_max + 1


@dataclass(frozen=True)
class PhaseResult:
    """Principal-value phase with the modulus of its transition amplitude."""

    phase: float
    visibility: float
    defined: bool

    def require(self, label: str = "phase") -> float:
        if not self.defined:
            raise UndefinedPhaseError(label, self.visibility, numerics().epsilon_vis)
        return self.phase

    def as_optional(self) -> Optional[float]:
        return self.phase if self.defined else None


@dataclass(frozen=True)
class LocalUnitarySet:
    """One unitary per subsystem, in subsystem order."""

    unitaries: Tuple[Operator, ...]

    def __post_init__(self):
        ops = tuple(self.unitaries)
        if not ops:
            raise ValidationError("LocalUnitarySet cannot be empty", error_code="EMPTY_LOCALS")
        for i, op in enumerate(ops):
            if op.kind is not OperatorKind.UNITARY:
                raise StateValidationError(
                    f"Local operator {i} is not tagged unitary",
                    "LOCAL_NOT_UNITARY",
                    context={"index": i, "kind": op.kind.value},
                )
        object.__setattr__(self, "unitaries", ops)

    @property
    def shape(self) -> HilbertShape:
        return HilbertShape(tuple(d for op in self.unitaries for d in op.shape.dims))

    def check_matches(self, shape: HilbertShape) -> None:
        local_dims = [op.shape.total for op in self.unitaries]
        if tuple(local_dims) != shape.dims:
            raise DimensionMismatchError("LocalUnitarySet", shape.dims, local_dims)


@dataclass(frozen=True)
class DeficitReport:
    global_phase: PhaseResult
    local_phases: Tuple[PhaseResult, ...]
    deficit: Optional[float]
    deficit_unwrapped: Optional[float]
    entangled_witnessed: bool
    witness_tolerance: float
    undefined_phases: Tuple[str, ...] = ()

    @property
    def defined(self) -> bool:
        return not self.undefined_phases

    def to_dict(self) -> Dict[str, Any]:
        return {
            "global_phase": self.global_phase.as_optional(),
            "global_visibility": self.global_phase.visibility,
            "local_phases": [p.as_optional() for p in self.local_phases],
            "local_visibilities": [p.visibility for p in self.local_phases],
            "deficit": self.deficit,
            "deficit_unwrapped": self.deficit_unwrapped,
            "entangled_witnessed": self.entangled_witnessed,
            "witness_tolerance": self.witness_tolerance,
            "undefined_phases": list(self.undefined_phases),
        }


@dataclass(frozen=True)
class ParameterGrid:
    """Ordered parameter points of one audit or sweep."""

    description: str
    points: Tuple[Dict[str, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(dict(p) for p in self.points))

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class DiscrepancyRecord:
    formula_id: str
    grid: str
    max_abs_error: Optional[float]
    classification: Classification
    worst_point: Optional[Dict[str, float]]
    evaluated_points: int
    undefined_points: int
    finite_where_oracle_undefined: int
    notes: str = ""
    extra: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        threshold = get_service_config().audit.confirm_threshold
        expected = (
            Classification.CONFIRMED
            if self.max_abs_error is not None
            and self.max_abs_error < threshold
            and self.finite_where_oracle_undefined == 0
            else Classification.DEVIATES
        )
        if Classification(self.classification) is not expected:
            raise ValidationError(
                "Classification inconsistent with max_abs_error",
                error_code="BAD_CLASSIFICATION",
                context={"formula_id": self.formula_id, "max_abs_error": self.max_abs_error},
            )
        object.__setattr__(self, "classification", expected)
