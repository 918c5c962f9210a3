import pytest

from skabelund import enumerate_all, make_params


@pytest.fixture(scope="session")
def p1():
    return make_params(1)


@pytest.fixture(scope="session")
def p2():
    return make_params(2)


@pytest.fixture(scope="session")
def p3():
    return make_params(3)


@pytest.fixture(scope="session")
def records_s1(p1):
    return enumerate_all(p1)


@pytest.fixture(scope="session")
def records_s2(p2):
    return enumerate_all(p2)
