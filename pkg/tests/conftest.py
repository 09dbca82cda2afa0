import itertools
import random

import pytest
from hypothesis import settings

from planeprox import PlaneGraph, cube, cycle4, icosahedron, k4, octahedron

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

SMALL = {"k4": k4, "c4": cycle4, "octahedron": octahedron, "cube": cube, "icosahedron": icosahedron}


def floyd_warshall(g: PlaneGraph) -> list[list[int]]:
    inf = float("inf")
    n = g.n
    d = [[0 if i == j else (1 if g.has_edge(i, j) else inf) for j in range(n)] for i in range(n)]
    for k, i, j in itertools.product(range(n), repeat=3):
        if d[i][k] + d[k][j] < d[i][j]:
            d[i][j] = d[i][k] + d[k][j]
    return d


def random_relabel(g: PlaneGraph, seed: int) -> tuple[PlaneGraph, list[int]]:
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return g.relabel(perm), perm


@pytest.fixture(params=sorted(SMALL))
def small_graph(request):
    return SMALL[request.param]()


_ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
