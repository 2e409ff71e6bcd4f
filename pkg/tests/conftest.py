import pytest

from moykr import Config


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: mark test as slow (full-range verification)"
    )


@pytest.fixture(scope="function")
def small_config():
    """Engine configuration with verification ranges small enough for unit tests."""
    return Config(
        verify_max_level=3,
        verify_max_crossings=4,
        normal_form_max_crossings=5,
        scale_max_level=4,
        ring_max_level=5,
        homfly_max_level=3,
        homfly_max_crossings=4,
        adm_max_level=3,
        adm_max_crossings=4,
    )
