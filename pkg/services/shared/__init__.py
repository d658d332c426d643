# Shared Types and Exceptions
from .exceptions import (
    AuditError,
    ConfigurationError,
    DimensionMismatchError,
    PersistenceError,
    ServiceError,
    StateValidationError,
    TruncationError,
    UndefinedPhaseError,
    ValidationError,
)
from .types import (
    DeficitReport,
    DiscrepancyRecord,
    FockSpec,
    HilbertShape,
    LocalUnitarySet,
    Operator,
    ParameterGrid,
    PhaseResult,
    SchmidtForm,
    StateVector,
)

__all__ = [
    "ServiceError",
    "ConfigurationError",
    "ValidationError",
    "StateValidationError",
    "DimensionMismatchError",
    "UndefinedPhaseError",
    "TruncationError",
    "AuditError",
    "PersistenceError",
    "HilbertShape",
    "StateVector",
    "Operator",
    "SchmidtForm",
    "FockSpec",
    "PhaseResult",
    "LocalUnitarySet",
    "DeficitReport",
    "ParameterGrid",
    "DiscrepancyRecord",
]
