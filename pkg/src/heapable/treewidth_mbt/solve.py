from __future__ import annotations

from dataclasses import dataclass

from .decomposition import TreeDecomposition, make_nice, make_special
from .dp import mbt_dp
from .graph import UGraph


@dataclass(frozen=True)
class BinaryTree:
    size: int  # vertices
    edges: tuple[tuple[int, int], ...]
    vertices: frozenset[int]


def rooted_mbt(g: UGraph, td: TreeDecomposition, s: int, **dp_opts) -> BinaryTree:
    """Largest binary tree containing ``s`` with ``s`` of degree at most 2."""
    if not 0 <= s < g.n:
        raise ValueError(f"root {s} not in graph")
    nd = make_nice(g, td)
    gs, sd, sp = make_special(g, nd, s)
    res = mbt_dp(gs, sd, sp, **dp_opts)
    edges = tuple(e for e in res.tree if sp not in e)
    verts = frozenset({s} | {v for e in edges for v in e})
    assert len(verts) == res.edges
    return BinaryTree(len(verts), edges, verts)


def balanced_tree_edges(count: int, offset: int) -> list[tuple[int, int]]:
    """Heap-shaped binary tree on ``offset .. offset + count`` (``count`` edges)."""
    return [(offset + (i - 1) // 2, offset + i) for i in range(1, count + 1)]


def hub_extension(g: UGraph, td: TreeDecomposition):
    """Graph with a hub ``s`` joined to everything plus a padding tree hanging
    off it, and a decomposition of that graph built from ``td``."""
    n, m = g.n, g.m
    s, b0 = n, n + 1
    pad = balanced_tree_edges(m, b0)
    g2 = g.add_vertices(m + 2, [(v, s) for v in range(n)] + [(s, b0)] + pad)
    bags = {("g", t): bag | {s} for t, bag in td.bags.items()}
    tree = [(("g", a), ("g", b)) for a, b in td.tree]
    bags[("b", 0)] = {s, b0}
    for i in range(1, m + 1):
        bags[("b", i)] = {s, b0 + (i - 1) // 2, b0 + i}
        tree.append((("b", (i - 1) // 2), ("b", i)))
    tree.append((("g", min(td.bags, key=repr)), ("b", 0)))
    return g2, TreeDecomposition(bags, tree), s


def unrooted_mbt(g: UGraph, td: TreeDecomposition, **dp_opts) -> BinaryTree:
    """Largest binary tree anywhere in ``g``."""
    if g.n == 0:
        return BinaryTree(0, (), frozenset())
    g2, td2, s = hub_extension(g, td)
    whole = rooted_mbt(g2, td2, s, **dp_opts)
    adj: dict[int, list[int]] = {}
    for u, v in whole.edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    best = None
    for v in sorted(w for w in adj.get(s, ()) if w < g.n):
        seen, todo = {v}, [v]
        while todo:
            for w in adj[todo.pop()]:
                if w != s and w not in seen:
                    seen.add(w)
                    todo.append(w)
        if best is None or len(seen) > len(best):
            best = seen
    if best is None:
        return BinaryTree(1, (), frozenset([0]))
    edges = tuple(e for e in whole.edges if e[0] in best and e[1] in best)
    return BinaryTree(len(best), edges, frozenset(best))
