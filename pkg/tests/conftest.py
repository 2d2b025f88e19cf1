from pathlib import Path

import pytest

from merozeta import _backend

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(params=_backend.available())
def backend(request):
    """Run the test once per available kernel implementation."""
    previous = _backend.NAME
    _backend.select(request.param)
    yield request.param
    _backend.select(previous)


@pytest.fixture
def fixtures_dir():
    return FIXTURES
