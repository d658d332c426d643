import dataclasses

import pytest

from services.config import (
    AuditConfig,
    NumericsConfig,
    ServiceConfig,
    get_service_config,
    numerics,
    set_service_config,
)


class TestServiceConfig:
    def test_holds_only_numerics_and_audit(self):
        assert [f.name for f in dataclasses.fields(ServiceConfig)] == ["numerics", "audit"]

    def test_from_env_reads_prefixed_variables(self, monkeypatch):
        monkeypatch.setenv("NUMERICS_EPSILON_VIS", "1e-7")
        monkeypatch.setenv("AUDIT_KONDO_THETA_POINTS", "11")
        monkeypatch.setenv("DEBUG", "true")
        config = ServiceConfig.from_env()
        assert config.numerics.epsilon_vis == pytest.approx(1e-7)
        assert config.audit.kondo_theta_points == 11
        assert not hasattr(config, "debug_mode")

    def test_global_instance_is_cached_until_reset(self, monkeypatch):
        first = get_service_config()
        assert get_service_config() is first
        monkeypatch.setenv("NUMERICS_WITNESS_TOLERANCE", "1e-5")
        set_service_config(None)
        assert numerics().witness_tolerance == pytest.approx(1e-5)

    def test_explicit_config_wins(self):
        custom = ServiceConfig(NumericsConfig(epsilon_vis=0.1), AuditConfig())
        set_service_config(custom)
        assert numerics().epsilon_vis == 0.1
