import pytest

from tools.settings import Settings, use_settings


@pytest.fixture(autouse=True)
def default_settings():
    """Every test starts from the built-in defaults, not the user's config or env."""
    use_settings(Settings())
    yield
    use_settings(Settings())
