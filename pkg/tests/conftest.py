import pytest

from qhopf.catalog import load_builtin


@pytest.fixture(scope="session")
def e1():
    return load_builtin("z2-group")


@pytest.fixture(scope="session")
def e2():
    return load_builtin("z2-cocycle")


@pytest.fixture(scope="session")
def e3():
    return load_builtin("sweedler-h4")


@pytest.fixture(scope="session")
def e4():
    return load_builtin("grassmann-theta")


@pytest.fixture(scope="session")
def e5():
    return load_builtin("sweedler-twisted")
