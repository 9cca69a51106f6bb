import pytest

from operadic.core import Signature


@pytest.fixture(scope="session")
def sig():
    """The running example signature: one generator per arity 1, 2, 3."""
    return Signature((("a", 1), ("b", 2), ("c", 3)))
