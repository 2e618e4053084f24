"""Shared fixtures: fresh settings and logging per test, small prime fields."""

import pytest
from hypothesis import HealthCheck, settings

from packages.core.utils.config import get_settings
from packages.core.utils.log_config import configure_logging
from packages.ffpoly.field import PrimeField

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def fresh_settings():
    """Drop cached settings so monkeypatched DECOMP_* variables take effect."""
    get_settings.cache_clear()
    configure_logging(get_settings())
    yield
    get_settings.cache_clear()


@pytest.fixture
def f3() -> PrimeField:
    return PrimeField(3)


@pytest.fixture
def f5() -> PrimeField:
    return PrimeField(5)


@pytest.fixture
def f7() -> PrimeField:
    return PrimeField(7)


@pytest.fixture
def f11() -> PrimeField:
    return PrimeField(11)
