import pytest

from src.graphs.families import build_complete, build_cycle, build_path, build_star, graph_g1, graph_g2
from src.graphs.schemas import Graph


@pytest.fixture
def p5() -> Graph:
    return build_path(5)


@pytest.fixture
def c4() -> Graph:
    return build_cycle(4)


@pytest.fixture
def k4() -> Graph:
    return build_complete(4)


@pytest.fixture
def k5() -> Graph:
    return build_complete(5)


@pytest.fixture
def star4() -> Graph:
    """K_{1,3}: centre 0, leaves 1..3."""
    return build_star(4)


@pytest.fixture
def prism() -> Graph:
    return graph_g1()


@pytest.fixture
def utility() -> Graph:
    return graph_g2()


@pytest.fixture
def edgeless5() -> Graph:
    return Graph.from_edges(5, ())
