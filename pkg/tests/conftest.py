import random

import pytest

from heapable.permdag import DiGraph, TopOrder
from heapable.treewidth_mbt import UGraph

# letters -> vertex ids for the small lettered drawings
A, B, C, D = range(4)


def lettered(arcs, n=4):
    return DiGraph(n, arcs)


@pytest.fixture
def two_letter_dag():
    """b->a, d->a, d->c; ordered (c, a, d, b) it is realised by 2 1 2 1."""
    return lettered([(B, A), (D, A), (D, C)]), TopOrder([C, A, D, B])


@pytest.fixture
def umbrella_dag():
    """b->a, c->a, d->a, d->b: (a,b,c,d) has the umbrella (b,c,d); (a,b,d,c) is fine."""
    g = lettered([(B, A), (C, A), (D, A), (D, B)])
    return g, TopOrder([A, B, C, D]), TopOrder([A, B, D, C])


@pytest.fixture
def suffix_dag():
    """Eight vertices in identity order; positions 3, 5 and 8 receive arcs from
    every later vertex."""
    p = lambda i: i - 1  # noqa: E731
    arcs = [(4, 3), (5, 3), (6, 3), (7, 3), (8, 3), (6, 5), (7, 5), (8, 5), (2, 1), (4, 1)]
    return DiGraph(8, [(p(a), p(b)) for a, b in arcs]), TopOrder.identity(8)


def random_connected(rng: random.Random, n: int, m: int) -> UGraph:
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    rest = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
    rng.shuffle(rest)
    while len(edges) < m and rest:
        edges.add(rest.pop())
    return UGraph(n, edges)


def random_dag(rng: random.Random, n: int, p: float = 0.5) -> DiGraph:
    """Arcs only point from later to earlier ids, so identity is topological."""
    return DiGraph(n, [(j, i) for j in range(n) for i in range(j) if rng.random() < p])


def random_top_order(rng: random.Random, g: DiGraph) -> TopOrder:
    """Uniform-ish random topological order (random ready vertex each step)."""
    indeg = [len(g.succ[v]) for v in range(g.n)]  # arcs point backwards
    ready = [v for v in range(g.n) if indeg[v] == 0]
    out = []
    while ready:
        v = ready.pop(rng.randrange(len(ready)))
        out.append(v)
        for u in g.pred[v]:
            indeg[u] -= 1
            if indeg[u] == 0:
                ready.append(u)
    return TopOrder(out)
