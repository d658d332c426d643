import numpy as np
import pytest

from services.config import set_service_config

SEED = 20240101


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(SEED)


@pytest.fixture(autouse=True)
def fresh_service_config():
    """Each test sees the environment-derived configuration."""
    set_service_config(None)
    yield
    set_service_config(None)
