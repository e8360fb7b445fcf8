import functools

import pytest

from mgreg import Presentation, RingSpec, quotient_ring

P11 = RingSpec((2, 2))
P12 = RingSpec((2, 3))

KOSZUL = ["x1*y1", "x2*y2"]
IRRELEVANT = ["x1*y1", "x1*y2", "x2*y1", "x2*y2"]
BIDEG21 = ["x1^2*y1 + x2^2*y2"]


@functools.lru_cache(maxsize=None)
def regression_set():
    """name -> module, shared so the per-module caches are reused."""
    return {
        "S(P1xP1)": Presentation.free(P11, [(0, 0)]),
        "S(P1xP2)": Presentation.free(P12, [(0, 0)]),
        "S(-1,-2)": Presentation.free(P11, [(1, 2)]),
        "S/(x1y1,x2y2)": quotient_ring(P11, KOSZUL),
        "S/B": quotient_ring(P11, IRRELEVANT),
        "S/(f21)": quotient_ring(P11, BIDEG21),
    }


@pytest.fixture
def reg_set():
    return regression_set()


@pytest.fixture
def koszul():
    return regression_set()["S/(x1y1,x2y2)"]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
