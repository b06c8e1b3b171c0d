import pytest

from gpea.construct import antichain_gpea, chain, diamond, trivial

# element ids in the named models
A, B, ONE = 1, 2, 3  # D4 = {0, a, b, 1}


@pytest.fixture
def E1():
    return trivial()


@pytest.fixture
def E2():
    return chain(2)


@pytest.fixture
def E3():
    return chain(3)


@pytest.fixture
def D4():
    return diamond()


@pytest.fixture
def V3():
    return antichain_gpea(2)
