import pytest

from expocolor.graphs import make_complete, make_cycle, make_grotzsch


@pytest.fixture
def k4():
    return make_complete(4)


@pytest.fixture
def c5():
    return make_cycle(5)


@pytest.fixture
def grotzsch():
    return make_grotzsch()
