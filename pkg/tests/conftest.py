import pytest

from corpus import named_graphs


@pytest.fixture(scope="session")
def graphs():
    return named_graphs()
