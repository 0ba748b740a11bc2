import numpy as np
import pytest

from graph_frames import Graph, decompose, laplacian, parse_edge_list
from graph_frames.operators import kernel_from_lagrange

STAR_TEXT = "1 2\n1 3\n1 4"

# filled by test_acceptance, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_connected_graph(rng, n, p=0.5, weight_range=(0.1, 3.0)):
    """Random spanning tree plus random extra edges, uniform weights."""
    edges = {}
    order = rng.permutation(n) + 1
    for k in range(1, n):
        a, b = int(order[k]), int(order[rng.integers(0, k)])
        edges[(min(a, b), max(a, b))] = rng.uniform(*weight_range)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) not in edges and rng.random() < p:
                edges[(i, j)] = rng.uniform(*weight_range)
    return Graph.from_edges(n, [(i, j, w) for (i, j), w in edges.items()])


def random_basis(rng, n_max=8, n_min=2):
    n = int(rng.integers(n_min, n_max + 1))
    return decompose(laplacian(random_connected_graph(rng, n)))


def random_complex(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


@pytest.fixture
def star_graph():
    return parse_edge_list(STAR_TEXT, 4)


@pytest.fixture
def star(star_graph):
    return decompose(laplacian(star_graph))


@pytest.fixture
def p2():
    return decompose(laplacian(parse_edge_list("1 2", 2)))


@pytest.fixture
def star_kernel():
    return kernel_from_lagrange([(0, 1), (1, 1), (4, 0)])
