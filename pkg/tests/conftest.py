import pytest

from pathenergy.enumeration import connected_graphs
from pathenergy.graphs import Graph


@pytest.fixture(scope="session")
def paw() -> Graph:
    """Triangle {1,2,3} with pendant vertex 0; the standard worked example."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (1, 3)])


@pytest.fixture(scope="session")
def connected_upto_7():
    return [g for n in range(1, 8) for g in connected_graphs(n)]


@pytest.fixture(scope="session")
def connected_upto_8():
    return [g for n in range(1, 9) for g in connected_graphs(n)]
