from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


@dataclass(frozen=True)
class UGraph:
    """Simple undirected graph on ``0..n-1``; edges stored as ``(min, max)``."""

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable = ()):
        norm = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} outside 0..{n - 1}")
            norm.add((min(u, v), max(u, v)))
        adj = [[] for _ in range(n)]
        for u, v in sorted(norm):
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def add_vertices(self, count: int, edges: Iterable = ()) -> "UGraph":
        return UGraph(self.n + count, list(self.edges) + list(edges))


def path_graph(n: int) -> UGraph:
    return UGraph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> UGraph:
    return UGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> UGraph:
    """Centre 0 joined to ``1..leaves``."""
    return UGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def ladder_graph(rungs: int) -> UGraph:
    """Two rails ``2i`` and ``2i+1`` joined at every rung."""
    edges = [(2 * i, 2 * i + 1) for i in range(rungs)]
    for i in range(rungs - 1):
        edges += [(2 * i, 2 * i + 2), (2 * i + 1, 2 * i + 3)]
    return UGraph(2 * rungs, edges)


def check_binary_tree(g: UGraph, tree_edges, root: int | None = None) -> str | None:
    """Independent witness check; returns a reason when ``tree_edges`` is not a
    connected acyclic subgraph of ``g`` with degrees <= 3 (root <= 2)."""
    tree_edges = [(min(u, v), max(u, v)) for u, v in tree_edges]
    if len(set(tree_edges)) != len(tree_edges):
        return "repeated edge"
    for e in tree_edges:
        if e not in g.edges:
            return f"edge {e} not in graph"
    verts = {x for e in tree_edges for x in e}
    if root is not None:
        verts.add(root)
    if not verts:
        return None
    deg = {v: 0 for v in verts}
    adj = {v: [] for v in verts}
    for u, v in tree_edges:
        deg[u] += 1
        deg[v] += 1
        adj[u].append(v)
        adj[v].append(u)
    if any(d > 3 for d in deg.values()):
        return "degree above 3"
    if root is not None and deg[root] > 2:
        return "root degree above 2"
    if len(tree_edges) != len(verts) - 1:
        return "not a tree (edge count)"
    start = next(iter(verts))
    seen, stack = {start}, [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if seen != verts:
        return "disconnected"
    return None
