"""Shared graph fixtures: named small graphs plus a seeded random corpus."""

import random

import pytest

from chipfiring.graph import Multigraph, build_graph


def complete_graph(n: int) -> Multigraph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def banana_graph(k: int) -> Multigraph:
    return build_graph(2, [(0, 1)] * k)


def path_graph(n: int) -> Multigraph:
    return build_graph(n, [(v, v + 1) for v in range(n - 1)])


def cube_graph() -> Multigraph:
    edges = [
        (i, i ^ (1 << b))
        for i in range(8)
        for b in range(3)
        if i < (i ^ (1 << b))
    ]
    return build_graph(8, edges)


def random_multigraph(seed: int) -> Multigraph:
    """Connected loop-free multigraph with n <= 6, 2 <= m <= 10."""
    rng = random.Random(1000 + seed)
    n = rng.randint(2, 6)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    m = rng.randint(max(2, n - 1), 10)
    while len(edges) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.append((min(u, v), max(u, v)))
    return build_graph(n, edges)


def named_corpus() -> dict[str, Multigraph]:
    return {
        "k3": complete_graph(3),
        "k4": complete_graph(4),
        "k5": complete_graph(5),
        "b2": banana_graph(2),
        "b3": banana_graph(3),
        "p4": path_graph(4),
        "cube": cube_graph(),
    }


def full_corpus() -> list[tuple[str, Multigraph]]:
    graphs = list(named_corpus().items())
    graphs.extend((f"rand{i}", random_multigraph(i)) for i in range(25))
    return graphs


@pytest.fixture(scope="session")
def k3():
    return complete_graph(3)


@pytest.fixture(scope="session")
def k4():
    return complete_graph(4)


@pytest.fixture(scope="session")
def k5():
    return complete_graph(5)


@pytest.fixture(scope="session")
def b2():
    return banana_graph(2)


@pytest.fixture(scope="session")
def b3():
    return banana_graph(3)


@pytest.fixture(scope="session")
def p3():
    return path_graph(3)


@pytest.fixture(scope="session")
def p4():
    return path_graph(4)


@pytest.fixture(scope="session")
def cube():
    return cube_graph()


@pytest.fixture(scope="session")
def corpus():
    return full_corpus()
