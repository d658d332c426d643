from dataclasses import dataclass
import os


@dataclass(frozen=True)
class NumericsConfig:
    """Tolerances shared by the state, phase and measure packages"""

    # below this visibility a phase is reported undefined
    epsilon_vis: float = 1e-9
    witness_tolerance: float = 1e-8

    # structural invariants of StateVector / Operator
    norm_tol: float = 1e-12
    unitary_tol: float = 1e-10
    hermitian_tol: float = 1e-12
    trace_tol: float = 1e-12
    psd_tol: float = 1e-10

    # Schmidt coefficients below this are exact zeros
    schmidt_zero: float = 1e-12
    # eigenvalue floor before square roots (concurrence)
    spectrum_floor: float = 1e-12

    @classmethod
    def from_env(cls) -> "NumericsConfig":
        """Create NumericsConfig from environment variables"""
        return cls(
            epsilon_vis=float(os.getenv("NUMERICS_EPSILON_VIS", "1e-9")),
            witness_tolerance=float(os.getenv("NUMERICS_WITNESS_TOLERANCE", "1e-8")),
            norm_tol=float(os.getenv("NUMERICS_NORM_TOL", "1e-12")),
            unitary_tol=float(os.getenv("NUMERICS_UNITARY_TOL", "1e-10")),
            hermitian_tol=float(os.getenv("NUMERICS_HERMITIAN_TOL", "1e-12")),
            trace_tol=float(os.getenv("NUMERICS_TRACE_TOL", "1e-12")),
            psd_tol=float(os.getenv("NUMERICS_PSD_TOL", "1e-10")),
            schmidt_zero=float(os.getenv("NUMERICS_SCHMIDT_ZERO", "1e-12")),
            spectrum_floor=float(os.getenv("NUMERICS_SPECTRUM_FLOOR", "1e-12")),
        )
