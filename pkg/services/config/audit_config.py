from dataclasses import dataclass
import os
from typing import Any, Dict


@dataclass(frozen=True)
class AuditConfig:
    """Configuration for the published-formula audit"""

    # CONFIRMED below, DEVIATES at or above
    confirm_threshold: float = 1e-6

    # grid evaluation
    workers: int = 4

    # grid resolutions
    micro_macro_angles: int = 10
    cat_psi_points: int = 41
    kondo_theta_points: int = 101

    # Fock truncation bound for the cat grid
    cat_tail: float = 1e-12

    @classmethod
    def from_env(cls) -> "AuditConfig":
        """Create AuditConfig from environment variables"""
        return cls(
            confirm_threshold=float(os.getenv("AUDIT_CONFIRM_THRESHOLD", "1e-6")),
            workers=int(os.getenv("AUDIT_WORKERS", "4")),
            micro_macro_angles=int(os.getenv("AUDIT_MICRO_MACRO_ANGLES", "10")),
            cat_psi_points=int(os.getenv("AUDIT_CAT_PSI_POINTS", "41")),
            kondo_theta_points=int(os.getenv("AUDIT_KONDO_THETA_POINTS", "101")),
            cat_tail=float(os.getenv("AUDIT_CAT_TAIL", "1e-12")),
        )

    def get_params_dict(self) -> Dict[str, Any]:
        """Grid parameters as recorded in report headers"""
        return {
            "confirm_threshold": self.confirm_threshold,
            "micro_macro_angles": self.micro_macro_angles,
            "cat_psi_points": self.cat_psi_points,
            "kondo_theta_points": self.kondo_theta_points,
            "cat_tail": self.cat_tail,
        }
