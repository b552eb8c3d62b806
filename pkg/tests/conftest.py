"""
Configuración compartida de pytest: logging sin archivos, perfiles de
hypothesis y abanicos incluidos como fixtures.
"""

import os

os.environ.setdefault("LOG_TO_FILE", "false")

import pytest  # noqa: E402
from hypothesis import HealthCheck, settings  # noqa: E402

from tests.fixtures.fans import BUNDLED, FANO, cox  # noqa: E402

settings.register_profile(
    "dev", max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile(
    "ci", max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


@pytest.fixture
def p2():
    return cox("p2")


@pytest.fixture
def p1xp1():
    return cox("p1xp1")


@pytest.fixture
def f1():
    return cox("f1")


@pytest.fixture
def f2():
    return cox("f2")


@pytest.fixture(params=BUNDLED)
def bundled(request):
    return cox(request.param)


@pytest.fixture(params=FANO)
def fano(request):
    return cox(request.param)
