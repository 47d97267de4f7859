import pytest

from boxritz import PrecisionContext
from boxritz import verify as suite


@pytest.fixture(scope="session")
def ctx():
    return PrecisionContext(64)


@pytest.fixture(scope="session")
def published(ctx):
    """The five published runs, solved once per session: list of (table, reference)."""
    return suite.published_tables(ctx)
