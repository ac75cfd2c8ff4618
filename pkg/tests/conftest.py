import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hopfdiff import catalog


@pytest.fixture(scope="session")
def h4():
    return catalog.build("H4")


@pytest.fixture(scope="session")
def h8():
    return catalog.build("H8")


@pytest.fixture(scope="session")
def kc2():
    return catalog.build("kC2")


@pytest.fixture(scope="session")
def kc4():
    return catalog.build("kC4")


@pytest.fixture(scope="session")
def kc2xc2():
    return catalog.build("kC2xC2")


@pytest.fixture(scope="session")
def ks3():
    return catalog.build("kS3")


@pytest.fixture(scope="session")
def inversion_action():
    return catalog.build("action:inv:kC2:kC4")
