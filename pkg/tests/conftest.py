import pytest

from stereograph import enumerate_all, from_pattern, gen_complete_bipartite, gen_complete_ladder


@pytest.fixture(scope="session")
def k22():
    return from_pattern(2, [0])


@pytest.fixture(scope="session")
def k22_crossed():
    return from_pattern(2, [1])


@pytest.fixture(scope="session")
def k33():
    return gen_complete_bipartite(3)


@pytest.fixture(scope="session")
def kl3():
    return gen_complete_ladder(3)


@pytest.fixture(scope="session")
def kl4():
    return gen_complete_ladder(4)


@pytest.fixture(scope="session")
def all_st3():
    return list(enumerate_all(3))


@pytest.fixture(scope="session")
def all_st4():
    return list(enumerate_all(4))


@pytest.fixture(scope="session")
def all_st5():
    return list(enumerate_all(5))
