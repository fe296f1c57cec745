import sys
from math import gcd
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow exhaustive tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive checks taking minutes; enable with --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def sweep_300():
    """Every filling of every L(p, q) with p <= 300."""
    from lensfill.fillings import LensSpace, fillings_of

    out = []
    for p in range(2, 301):
        for q in range(1, p):
            if gcd(p, q) == 1:
                out.extend(fillings_of(LensSpace(p, q)))
    return out
