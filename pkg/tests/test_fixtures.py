"""Main algorithms against values pinned from the brute-force solvers."""

import math
from pathlib import Path

import pytest
from regenerate_fixtures import decode_dag

from heapable.alphabet import greedy_assign, min_alpha_lp
from heapable.formats import decode_ugraph, parse_fixture
from heapable.permdag import is_topological
from heapable.sequences import lhs_dp
from heapable.treewidth_mbt import heuristic_decomposition, rooted_mbt, unrooted_mbt

FIX = Path(__file__).parent / "fixtures"


def load(name):
    rows = parse_fixture((FIX / name).read_text())
    assert rows, name
    return rows


def _value(text):
    return math.inf if text == "inf" else int(text)


@pytest.mark.parametrize("name", ["lhs.txt", "mbt_dag.txt"])
def test_sequence_fixtures(name):
    # both files hold lengths that equal the longest heapable subsequence
    for seq, value in load(name):
        assert lhs_dp([int(v) for v in seq.split()])[0] == int(value), seq


def test_unrooted_fixtures():
    for code, value in load("mbt.txt"):
        g = decode_ugraph(code)
        assert unrooted_mbt(g, heuristic_decomposition(g)).size == int(value), code


def test_rooted_fixtures():
    for code, value in load("mbt_rooted.txt"):
        code, _, root = code.partition("@")
        g = decode_ugraph(code)
        assert rooted_mbt(g, heuristic_decomposition(g), int(root)).size == int(value), code


def test_alpha_fixtures():
    finite = 0
    for code, value in load("alpha.txt"):
        g, t = decode_dag(code)
        assert is_topological(g, t)
        assert greedy_assign(g, t).alpha == _value(value), code
        assert min_alpha_lp(g, t) == _value(value), code
        finite += value != "inf"
    assert finite >= 10
