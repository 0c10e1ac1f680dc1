import pytest

from umod.config import get_settings
from umod.relation import Tournament, UndirectedGraph


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def p4():
    """Path 0 - 1 - 2 - 3."""
    return UndirectedGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def k3():
    return UndirectedGraph.from_edges(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def bull():
    """Triangle 0 1 2 with pendants 3 on 1 and 4 on 2."""
    return UndirectedGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])


@pytest.fixture
def c5():
    return UndirectedGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def matching4():
    return UndirectedGraph.from_edges(4, [(0, 1), (2, 3)])


@pytest.fixture
def cycle3():
    """0 -> 1 -> 2 -> 0."""
    return Tournament.from_arcs(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def write_input(tmp_path):
    """Write input text to a file under tmp_path and return its path."""

    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write
