from .audit_config import AuditConfig
from .numerics_config import NumericsConfig
from .service_config import ServiceConfig, get_service_config, numerics, set_service_config

__all__ = [
    "ServiceConfig",
    "get_service_config",
    "set_service_config",
    "numerics",
    "NumericsConfig",
    "AuditConfig",
]
