import pytest

from ospectra.enumeration import enumerate_outerplanar


@pytest.fixture(scope="session")
def connected_outerplanar():
    """Connected outerplanar graphs by order, cached once per session."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = enumerate_outerplanar(n, connected_only=True)
        return cache[n]

    return get
