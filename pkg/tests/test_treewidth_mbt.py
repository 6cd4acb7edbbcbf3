import gc
import random

import pytest
from conftest import random_connected

from heapable.oracles import brute_mbt_rooted, brute_mbt_undirected
from heapable.treewidth_mbt import (
    InvalidDecomposition,
    NiceDecomposition,
    NiceNode,
    TreeDecomposition,
    UGraph,
    check_binary_tree,
    check_decomposition,
    complete_graph,
    heuristic_decomposition,
    hub_extension,
    is_valid,
    join_partition,
    ladder_decomposition,
    ladder_graph,
    make_nice,
    make_special,
    mbt_dp,
    merge_parts,
    nice_violation,
    path_decomposition,
    path_graph,
    rgs_partitions,
    rooted_mbt,
    star_graph,
    unrooted_mbt,
)


# -- decompositions ------------------------------------------------------------------


def test_validate_examples():
    g = path_graph(3)
    assert check_decomposition(g, path_decomposition([{0, 1}, {1, 2}])) is None
    bad = check_decomposition(g, path_decomposition([{0}, {2}]))
    assert bad.condition == "T2" and bad.vertices == (0, 1)
    assert is_valid(UGraph(1), TreeDecomposition({"x": {0}}))


def test_validate_each_condition():
    g = path_graph(3)
    lone = UGraph(3, [(0, 1)])
    assert check_decomposition(lone, path_decomposition([{0, 1}, {1}])).condition == "T1"
    t3 = path_decomposition([{0, 1}, {0, 2}, {1, 2}])
    assert check_decomposition(g, t3).render(1) == "T3 violated: bags holding vertex 2 are not connected"
    cyc = TreeDecomposition({0: {0, 1}, 1: {1, 2}, 2: {1}}, [(0, 1), (1, 2), (2, 0)])
    assert check_decomposition(g, cyc).condition == "tree"
    assert check_decomposition(g, TreeDecomposition({0: {0, 1, 5}})).condition == "T1"


def test_heuristic_widths():
    assert heuristic_decomposition(path_graph(7)).width == 1
    assert heuristic_decomposition(star_graph(5)).width == 1
    assert heuristic_decomposition(UGraph(1)).width == 0
    for n in (3, 5, 9):
        cyc = UGraph(n, [(i, (i + 1) % n) for i in range(n)])
        td = heuristic_decomposition(cyc)
        assert td.width == 2 and is_valid(cyc, td)
    assert is_valid(UGraph(0), heuristic_decomposition(UGraph(0)))


def test_nice_single_vertex():
    nd = make_nice(UGraph(1), TreeDecomposition({0: {0}}))
    assert [x.kind for x in nd.nodes] == ["leaf", "introduce", "drop"]
    assert nd.nodes[nd.root].bag == frozenset()


def test_nice_single_edge_goes_below_deeper_drop():
    nd = make_nice(path_graph(2), TreeDecomposition({0: {0, 1}}))
    kinds = [x.kind for x in nd.nodes]
    assert kinds == ["leaf", "introduce", "introduce", "introduce_edge", "drop", "drop"]
    assert nd.nodes[4].vertex == 0 and nd.nodes[3].edge == (0, 1)
    assert nice_violation(path_graph(2), nd) is None


def test_nice_rejects_invalid_input():
    with pytest.raises(InvalidDecomposition):
        make_nice(path_graph(3), path_decomposition([{0}, {2}]))


def test_nice_conformance_on_random_graphs():
    rng = random.Random(21)
    for _ in range(60):
        n = rng.randint(1, 12)
        g = random_connected(rng, n, rng.randint(n - 1, min(25, n * (n - 1) // 2)))
        td = heuristic_decomposition(g)
        nd = make_nice(g, td)
        assert nice_violation(g, nd) is None
        assert nd.width == td.width
        assert len(nd.nodes) <= 4 * (td.width + 1) * max(n, len(td.bags)) + g.m + 2


def test_special_decomposition():
    rng = random.Random(22)
    for _ in range(30):
        n = rng.randint(1, 9)
        g = random_connected(rng, n, rng.randint(n - 1, n + 4))
        nd = make_nice(g, heuristic_decomposition(g))
        s = rng.randrange(n)
        gs, sd, sp = make_special(g, nd, s)
        assert sp == n and gs.has_edge(s, sp)
        assert all(sp in x.bag for x in sd.nodes)
        assert sd.width == nd.width + 1
        assert is_valid(gs, sd.as_tree_decomposition())
        assert nice_violation(gs, sd, pendant=sp) is None


def test_nice_check_flags_misplaced_edge():
    nd = make_nice(path_graph(2), TreeDecomposition({0: {0, 1}}))
    nodes = list(nd.nodes)
    # move the edge above both drops by swapping it with the first drop
    nodes[3], nodes[4] = (NiceNode("drop", frozenset({1}), (2,), vertex=0),
                          NiceNode("introduce_edge", frozenset({1}), (3,), edge=(0, 1)))
    assert nice_violation(path_graph(2), NiceDecomposition(tuple(nodes))) is not None


# -- partitions ------------------------------------------------------------------------


def test_rgs_counts_are_bell_numbers():
    assert [sum(1 for _ in rgs_partitions(n)) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


def test_join_merge_example():
    ok, parts = join_partition([{1, 2}, {3, 4}, {5}, {6}], [{1}, {2, 3, 5}, {4}, {6}])
    assert ok and sorted(map(sorted, parts)) == [[1, 2, 3, 4, 5], [6]]


def test_join_merge_detects_cycle():
    assert join_partition([{1, 2}], [{1, 2}]) == (False, None)
    assert merge_parts((0, 0, 1), (0, 1, 1)) == (0, 0, 0)


# -- dynamic program -------------------------------------------------------------------


def _labelled(edges, n):
    return UGraph(n, [(a - 1, b - 1) for a, b in edges])


def test_dp_value_at_a_middle_node():
    # bag v1..v6 over a subtree that already holds v7..v10 and all ten edges
    solid = [(1, 7), (2, 7), (3, 8), (3, 9), (5, 9), (9, 10)]
    dashed = [(2, 8), (4, 9), (7, 8), (6, 10)]
    g = _labelled(solid + dashed, 10)
    td = TreeDecomposition({"top": set(range(6)), "all": set(range(10))}, [("top", "all")])
    gs, sd, sp = make_special(g, make_nice(g, td, root="top"), 5)
    res = mbt_dp(gs, sd, sp, keep_tables=True)
    node = next(i for i, x in enumerate(sd.nodes)
                if x.kind == "drop" and x.bag == frozenset(range(6)) | {sp})
    v = lambda i: i - 1  # noqa: E731
    parts = [{v(1), v(2)}, {v(3), v(5)}, {v(4)}, {sp}]
    deg = {v(1): 1, v(2): 1, v(5): 1, v(4): 0, v(3): 2, sp: 0}
    assert res.lookup(node, parts, deg) == 6
    # giving v4 a degree makes the state infeasible
    assert res.lookup(node, parts, {**deg, v(4): 1}) is None


def test_dp_path_with_pendant_at_end():
    for n in (1, 2, 5, 9):
        g = path_graph(n)
        td = path_decomposition([{i, i + 1} for i in range(n - 1)] or [{0}])
        gs, sd, sp = make_special(g, make_nice(g, td), 0)
        res = mbt_dp(gs, sd, sp)
        assert res.edges == n
        assert check_binary_tree(gs, res.tree, root=sp) is None


def test_join_disjointness_is_asserted():
    sp = 2
    g = UGraph(3, [(0, 1), (0, 2)])
    chain = [
        NiceNode("leaf", frozenset({sp})),
        NiceNode("introduce", frozenset({sp, 0}), (0,), vertex=0),
        NiceNode("introduce", frozenset({sp, 0, 1}), (1,), vertex=1),
        NiceNode("introduce_edge", frozenset({sp, 0, 1}), (2,), edge=(0, 1)),
        NiceNode("drop", frozenset({sp, 0}), (3,), vertex=1),
    ]
    shifted = [NiceNode(x.kind, x.bag, tuple(c + 5 for c in x.children), x.vertex, x.edge)
               for x in chain]
    tail = [
        NiceNode("join", frozenset({sp, 0}), (4, 9)),
        NiceNode("introduce_edge", frozenset({sp, 0}), (10,), edge=(0, 2)),
        NiceNode("drop", frozenset({sp}), (11,), vertex=0),
    ]
    sd = NiceDecomposition(tuple(chain + shifted + tail))
    with pytest.raises(AssertionError):
        mbt_dp(g, sd, sp)
    assert mbt_dp(g, sd, sp, check_join_disjointness=False).edges >= 1


def test_state_count_bound():
    rng = random.Random(23)
    seen = set()
    for _ in range(80):
        n = rng.randint(2, 10)
        g = random_connected(rng, n, rng.randint(n - 1, min(16, n * (n - 1) // 2)))
        nd = make_nice(g, heuristic_decomposition(g))
        w = nd.width
        if w > 4:
            continue
        seen.add(w)
        gs, sd, sp = make_special(g, nd, 0)
        res = mbt_dp(gs, sd, sp)
        assert max(res.state_counts) <= (8 * w + 16) ** (w + 2)
    assert {1, 2, 3} <= seen


# -- rooted and unrooted ---------------------------------------------------------------


def test_rooted_examples():
    tri = complete_graph(3)
    tree = rooted_mbt(tri, heuristic_decomposition(tri), 0)
    assert tree.size == 3 and check_binary_tree(tri, tree.edges, root=0) is None
    assert rooted_mbt(UGraph(1), TreeDecomposition({0: {0}}), 0).size == 1
    star = star_graph(5)
    tree = rooted_mbt(star, heuristic_decomposition(star), 0)
    assert tree.size == 3 and check_binary_tree(star, tree.edges, root=0) is None
    with pytest.raises(ValueError):
        rooted_mbt(star, heuristic_decomposition(star), 6)


def test_unrooted_examples():
    p5 = path_graph(5)
    assert unrooted_mbt(p5, path_decomposition([{i, i + 1} for i in range(4)])).size == 5
    k4 = complete_graph(4)
    tree = unrooted_mbt(k4, heuristic_decomposition(k4))
    assert tree.size == 4 and check_binary_tree(k4, tree.edges) is None
    assert unrooted_mbt(UGraph(0), TreeDecomposition({0: ()})).size == 0
    loose = UGraph(3)
    assert unrooted_mbt(loose, heuristic_decomposition(loose)).size == 1
    star = star_graph(6)
    assert unrooted_mbt(star, heuristic_decomposition(star)).size == 4


def test_hub_extension_is_valid():
    g = ladder_graph(4)
    g2, td2, s = hub_extension(g, ladder_decomposition(4))
    assert is_valid(g2, td2)
    assert td2.width == 3 and g2.n == g.n + g.m + 2
    assert all(g2.has_edge(s, v) for v in range(g.n))


def test_unrooted_matches_oracle_on_small_graphs():
    rng = random.Random(24)
    for _ in range(20):
        n = rng.randint(1, 10)
        g = random_connected(rng, n, rng.randint(n - 1, min(16, n * (n - 1) // 2)))
        tree = unrooted_mbt(g, heuristic_decomposition(g))
        assert tree.size == brute_mbt_undirected(g)
        assert check_binary_tree(g, tree.edges) is None
        assert len(tree.vertices) == tree.size


def test_rooted_matches_oracle_on_disconnected_graphs():
    rng = random.Random(25)
    for _ in range(15):
        n = rng.randint(2, 8)
        g = UGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.3])
        td = heuristic_decomposition(g)
        for s in range(n):
            tree = rooted_mbt(g, td, s)
            assert tree.size == brute_mbt_rooted(g, s)
            assert check_binary_tree(g, tree.edges, root=s) is None


def test_ladders_are_spanned():
    for rungs in (1, 2, 5, 20):
        g = ladder_graph(rungs)
        tree = unrooted_mbt(g, ladder_decomposition(rungs))
        assert tree.size == g.n and check_binary_tree(g, tree.edges) is None


def test_check_binary_tree_catches_problems():
    k4 = complete_graph(4)
    assert check_binary_tree(k4, [(0, 1), (1, 2), (0, 2)]) is not None
    assert check_binary_tree(star_graph(4), [(0, 1), (0, 2), (0, 3), (0, 4)]) == "degree above 3"
    assert check_binary_tree(k4, [(0, 1), (0, 2), (0, 3)], root=0) == "root degree above 2"
    assert check_binary_tree(path_graph(4), [(0, 1), (2, 3)]) is not None
    assert check_binary_tree(path_graph(3), [(0, 2)]) is not None


def test_dp_restores_collector_state():
    g = path_graph(3)
    gs, sd, sp = make_special(g, make_nice(g, path_decomposition([{0, 1}, {1, 2}])), 0)
    assert gc.isenabled()
    mbt_dp(gs, sd, sp)
    assert gc.isenabled()
    gc.disable()
    try:
        mbt_dp(gs, sd, sp)
        assert not gc.isenabled()
    finally:
        gc.enable()
