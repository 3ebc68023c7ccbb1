import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from hyperchrom.hypercore import Hypergraph, single_edge, tight_cycle  # noqa: E402


@pytest.fixture
def K3():
    return Hypergraph.from_edges(3, [[0, 1], [1, 2], [0, 2]])


@pytest.fixture
def two_triples():
    """Edges {0,1,2} and {2,3,4} on five vertices."""
    return Hypergraph.from_edges(5, [[0, 1, 2], [2, 3, 4]])


@pytest.fixture
def triple():
    return single_edge(3)


@pytest.fixture
def tc43():
    return tight_cycle(4, 3)


@pytest.fixture
def path3():
    return Hypergraph.from_edges(3, [[0, 1], [1, 2]])


@pytest.fixture
def two_edges():
    return Hypergraph.from_edges(4, [[0, 1], [2, 3]])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
