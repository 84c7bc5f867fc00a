import pytest

from ivpoly import c_table, d_table, f_table, q_table, stirling_first


@pytest.fixture(scope="session")
def f20():
    return f_table(20)


@pytest.fixture(scope="session")
def d20(f20):
    return d_table(f20)


@pytest.fixture(scope="session")
def c20(d20):
    return c_table(20, d20)


@pytest.fixture(scope="session")
def q20():
    return q_table(20)


@pytest.fixture(scope="session")
def s14():
    return stirling_first(14)
