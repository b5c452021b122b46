import pytest

from freelcs.lcs import FiltrationEngine


@pytest.fixture(scope="session")
def engine2():
    """Shared n=2 engine; cells accumulate across tests."""
    return FiltrationEngine(2)


@pytest.fixture(scope="session")
def engine3():
    return FiltrationEngine(3)


@pytest.fixture(scope="session")
def engine4():
    return FiltrationEngine(4)
