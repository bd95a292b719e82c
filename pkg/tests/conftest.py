import contextlib
import os.path

import pytest

from halfarc.families import FamilyId, make_pair
from halfarc.quotients import verify_og4


@pytest.fixture()
def data_dir():
    """Returns the data directory within the test folder"""
    return os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture()
def working_dir():
    """Returns a context-manager that permits to change the working directory."""

    @contextlib.contextmanager
    def _impl(dir):
        try:
            old_dir = os.getcwd()
            yield os.chdir(dir)
        finally:
            os.chdir(old_dir)

    return _impl


@pytest.fixture(scope="module")
def g35():
    """G(3,5) acting on Gamma(3,5)"""
    return make_pair(FamilyId.GAMMA_G, 3, 5)


@pytest.fixture(scope="module")
def g35_verified(g35):
    return verify_og4(g35.graph, g35.group)


@pytest.fixture(scope="module")
def h34():
    """H(3,4) acting on Gamma(3,4)"""
    return make_pair(FamilyId.GAMMA_H, 3, 4)
