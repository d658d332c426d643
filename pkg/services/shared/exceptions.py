"""
Standardized exceptions for the services package.
Provides consistent error handling patterns across the phase toolkit.
"""

from typing import Any, Dict, Optional, Sequence


class ServiceError(Exception):
    """Base exception for all service-related errors"""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        context: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None,
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code or self.__class__.__name__
        self.context = context or {}
        self.cause = cause

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary for logging/CLI output"""
        return {
            "error_type": self.__class__.__name__,
            "error_code": self.error_code,
            "message": self.message,
            "context": self.context,
            "cause": str(self.cause) if self.cause else None,
        }


class ConfigurationError(ServiceError):
    """Raised when a sweep/CLI configuration is malformed"""

    pass


class ValidationError(ServiceError):
    """Raised when input validation fails"""

    pass


class StateValidationError(ValidationError):
    """Raised when a state or operator violates its structural invariants"""

    pass


class UndefinedPhaseError(ServiceError):
    """Raised when a phase is requested whose transition amplitude vanishes"""

    def __init__(self, label: str, visibility: float, epsilon: float):
        context = {"phase": label, "visibility": visibility, "epsilon_vis": epsilon}
        message = f"Phase '{label}' is undefined: visibility {visibility:.3e} < {epsilon:.1e}"
        super().__init__(message, "PHASE_UNDEFINED", context)


class TruncationError(ServiceError):
    """Raised when a Fock truncation cannot meet the requested tail bound"""

    pass


class AuditError(ServiceError):
    """Raised when a formula audit cannot be carried out"""

    pass


class PersistenceError(ServiceError):
    """Raised when dataset or report files cannot be written"""

    pass


class DimensionMismatchError(ValidationError):
    """Raised when operand dimensions do not line up"""

    def __init__(self, operation: str, expected: Sequence[int], actual: Sequence[int]):
        context = {"operation": operation, "expected": list(expected), "actual": list(actual)}
        message = (
            f"Dimension mismatch in {operation}: expected {list(expected)}, got {list(actual)}"
        )
        super().__init__(message, "DIMENSION_MISMATCH", context)
