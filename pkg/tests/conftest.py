import pytest

from zcoloring import Graph, generate_atoms


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


@pytest.fixture(scope="session")
def d3_catalog():
    return generate_atoms(3)


@pytest.fixture(scope="session")
def d4_triangle_free_catalog():
    return generate_atoms(4, triangle_free=True)
