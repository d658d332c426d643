from dataclasses import dataclass
from typing import Optional

from .audit_config import AuditConfig
from .numerics_config import NumericsConfig


@dataclass
class ServiceConfig:
    """Main configuration container for all services"""

    numerics: NumericsConfig
    audit: AuditConfig

    @classmethod
    def from_env(cls) -> "ServiceConfig":
        """Create ServiceConfig from environment variables"""
        return cls(
            numerics=NumericsConfig.from_env(),
            audit=AuditConfig.from_env(),
        )


# Global service configuration instance
_service_config: Optional[ServiceConfig] = None


def get_service_config() -> ServiceConfig:
    """Get global service configuration instance"""
    global _service_config
    if _service_config is None:
        _service_config = ServiceConfig.from_env()
    return _service_config


def set_service_config(config: Optional[ServiceConfig]) -> None:
    """Set global service configuration (mainly for testing)"""
    global _service_config
    _service_config = config


def numerics() -> NumericsConfig:
    return get_service_config().numerics
