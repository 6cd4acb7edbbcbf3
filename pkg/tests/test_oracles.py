import itertools
import math

import pytest

from heapable.oracles import (
    OracleBudget,
    OracleBudgetExceeded,
    brute_alpha,
    brute_gamma_alpha,
    brute_lhs,
    brute_mbt_directed,
    brute_mbt_rooted,
    brute_mbt_undirected,
)
from heapable.permdag import DiGraph, TopOrder, build_permdag
from heapable.treewidth_mbt import UGraph, complete_graph, path_graph, star_graph


@pytest.mark.parametrize("values, expected", [((1, 5, 3, 2, 4), 4), ((1, 3, 3, 2, 4), 5), ((), 0)])
def test_brute_lhs(values, expected):
    assert brute_lhs(values) == expected


def test_brute_mbt_directed():
    assert brute_mbt_directed(DiGraph(1)) == 1
    assert brute_mbt_directed(build_permdag((1, 3, 3, 2, 4))) == 5
    assert brute_mbt_directed(build_permdag((1, 5, 3, 2, 4))) == 4
    # three vertices all pointing at one sink: only two fit under it
    assert brute_mbt_directed(DiGraph(4, [(1, 0), (2, 0), (3, 0)])) == 3


def test_brute_mbt_undirected():
    assert brute_mbt_undirected(complete_graph(4)) == 4
    assert brute_mbt_undirected(path_graph(5)) == 5
    assert brute_mbt_undirected(UGraph(0)) == 0
    assert brute_mbt_undirected(star_graph(5)) == 4


def test_brute_mbt_rooted():
    assert brute_mbt_rooted(star_graph(5), 0) == 3
    assert brute_mbt_rooted(star_graph(5), 1) == 4
    assert brute_mbt_rooted(UGraph(2), 1) == 1


def test_brute_gamma_alpha(two_letter_dag, umbrella_dag):
    g, t = two_letter_dag
    assert brute_gamma_alpha(g, t) == 2
    g, bad, good = umbrella_dag
    assert brute_gamma_alpha(g, bad) == math.inf
    assert brute_gamma_alpha(g, good) < math.inf
    assert brute_gamma_alpha(DiGraph(1), TopOrder([0])) == 1
    assert brute_gamma_alpha(DiGraph(3), TopOrder.identity(3), k_max=2) == math.inf


def test_brute_alpha():
    assert brute_alpha(build_permdag((2, 3, 1, 2))) == 2
    assert brute_alpha(DiGraph(4, [(j, i) for j in range(4) for i in range(j)])) == 1
    assert brute_alpha(DiGraph(3, [(2, 1), (1, 0)])) == math.inf


def test_lettered_umbrella_orders(umbrella_dag):
    g, _, _ = umbrella_dag
    # some order of this graph is umbrella free, so alpha is finite
    assert brute_alpha(g) < math.inf


def test_budgets_refuse_large_inputs():
    with pytest.raises(OracleBudgetExceeded):
        brute_lhs([1] * 13)
    with pytest.raises(OracleBudgetExceeded):
        brute_mbt_undirected(path_graph(11))
    with pytest.raises(OracleBudgetExceeded):
        brute_mbt_directed(DiGraph(11))
    with pytest.raises(OracleBudgetExceeded):
        brute_gamma_alpha(DiGraph(7), TopOrder.identity(7))
    with pytest.raises(OracleBudgetExceeded):
        brute_alpha(DiGraph(8))
    assert brute_lhs([1, 2], budget=OracleBudget(2)) == 2


def test_heap_tree_equivalence_small():
    for n in range(6):
        for s in itertools.product(range(1, 4), repeat=n):
            assert brute_lhs(s) == brute_mbt_directed(build_permdag(s))


def test_oracles_are_deterministic():
    g = complete_graph(5)
    assert {brute_mbt_undirected(g) for _ in range(3)} == {5}
