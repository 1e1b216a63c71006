from pathlib import Path

import httpx
import pytest
import pytest_asyncio

from app.main import app
from app.services.algebra_catalog import algebra_catalog
from app.services.scalar_field import Characteristic

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest_asyncio.fixture
async def client():
    transport = httpx.ASGITransport(app=app)
    async with httpx.AsyncClient(transport=transport, base_url="http://test") as ac:
        yield ac


@pytest.fixture
def gl2_char0():
    return algebra_catalog.resolve("gl2", 0)


@pytest.fixture
def gl2_char2():
    return algebra_catalog.resolve("gl2", 2)


@pytest.fixture
def gl2_char3():
    return algebra_catalog.resolve("gl2", 3)


@pytest.fixture
def sl2_char3():
    return algebra_catalog.resolve("sl2", 3)


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def golden_dir():
    return GOLDEN_DIR


def _vec(char, *values):
    field = Characteristic(char)
    return tuple(field.scalar(v) for v in values)


@pytest.fixture
def vec():
    """Vector de escalares a partir de enteros o cadenas 'num/den'."""
    return _vec
