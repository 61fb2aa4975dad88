from functools import lru_cache

import pytest

from newtonstrata.parse import parse_element
from newtonstrata.rootdatum import build_root_datum


@lru_cache(maxsize=None)
def datum(spec, delta=None):
    return build_root_datum(spec, delta)


@pytest.fixture
def gl2():
    return datum("GL:2")


@pytest.fixture
def sl2():
    return datum("SL:2")


@pytest.fixture
def sl3():
    return datum("SL:3")


@pytest.fixture
def gl4():
    return datum("GL:4")


def elt(G, text):
    return parse_element(text, G)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
