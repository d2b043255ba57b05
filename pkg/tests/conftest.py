import pytest

import helpers


@pytest.fixture
def fig_left():
    return helpers.fig_left()


@pytest.fixture
def fig_right():
    return helpers.fig_right()


@pytest.fixture
def chain3():
    return helpers.chain(3)


@pytest.fixture(scope="session")
def corpus4():
    from orthantgeo.oracles import enumerate_convex_geometries

    return [g for n in range(5) for g in enumerate_convex_geometries(n)]
