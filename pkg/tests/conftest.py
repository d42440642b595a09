import pytest

from core.catalog import catalog_service
from core.fixtures import abelian, sl2, sl2_corrupt
from core.logging_config import setup_logging


@pytest.fixture(scope="session", autouse=True)
def quiet_logging():
    setup_logging(log_level="WARNING", log_to_console=False)


@pytest.fixture(scope="session")
def sl2_entry():
    return sl2()


@pytest.fixture(scope="session")
def sl2_algebra(sl2_entry):
    return sl2_entry.algebra


@pytest.fixture(scope="session")
def corrupt_algebra():
    return sl2_corrupt().algebra


@pytest.fixture(scope="session")
def abelian_algebra():
    return abelian(1).algebra


@pytest.fixture(scope="session")
def build():
    """Catalog lookup by spec string; construction is cached per session."""
    return catalog_service.construct_from_string
