"""Directed graphs, topological orders and permutation DAGs.

Vertices are ``0..n-1``.  Orders list the vertex at each position, so
``order.vertices[0]`` sits at position 1.  All arcs of a DAG point backwards
with respect to a topological order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .sequences import Sequence


@dataclass(frozen=True)
class DiGraph:
    n: int
    arcs: frozenset[tuple[int, int]]
    succ: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    pred: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        arcs = frozenset((int(u), int(v)) for u, v in arcs)
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc {(u, v)} outside 0..{n - 1}")
        succ = [[] for _ in range(n)]
        pred = [[] for _ in range(n)]
        for u, v in sorted(arcs):
            succ[u].append(v)
            pred[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "succ", tuple(map(tuple, succ)))
        object.__setattr__(self, "pred", tuple(map(tuple, pred)))

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    @property
    def m(self) -> int:
        return len(self.arcs)

    def remove_vertex(self, v: int) -> tuple["DiGraph", dict[int, int]]:
        """Graph without ``v``; vertices renumbered, mapping old -> new returned."""
        keep = [u for u in range(self.n) if u != v]
        ren = {u: i for i, u in enumerate(keep)}
        arcs = [(ren[a], ren[b]) for a, b in self.arcs if v not in (a, b)]
        return DiGraph(len(keep), arcs), ren


@dataclass(frozen=True)
class TopOrder:
    vertices: tuple[int, ...]
    pos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, vertices: Iterable[int]):
        vertices = tuple(vertices)
        if sorted(vertices) != list(range(len(vertices))):
            raise ValueError("order must list every vertex exactly once")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "pos", {v: i + 1 for i, v in enumerate(vertices)})

    @classmethod
    def identity(cls, n: int) -> "TopOrder":
        return cls(range(n))

    def __len__(self):
        return len(self.vertices)

    def at(self, position: int) -> int:
        """Vertex at 1-based ``position``."""
        return self.vertices[position - 1]


def is_topological(g: DiGraph, t: TopOrder) -> bool:
    if len(t) != g.n:
        return False
    return all(t.pos[u] < t.pos[v] for v, u in g.arcs)


def build_permdag(s) -> DiGraph:
    """Arc ``(t_j, t_i)`` whenever ``i < j`` and ``s[i] <= s[j]``."""
    items = s.items if isinstance(s, Sequence) else tuple(s)
    n = len(items)
    arcs = [(j, i) for j in range(n) for i in range(j) if items[i] <= items[j]]
    return DiGraph(n, arcs)


def is_acyclic(g: DiGraph) -> bool:
    indeg = [len(g.pred[v]) for v in range(g.n)]
    ready = [v for v in range(g.n) if indeg[v] == 0]
    seen = 0
    while ready:
        u = ready.pop()
        seen += 1
        for v in g.succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                ready.append(v)
    return seen == g.n


def is_transitively_closed(g: DiGraph) -> bool:
    return find_transitivity_gap(g) is None


def find_transitivity_gap(g: DiGraph) -> tuple[int, int, int] | None:
    """Some ``(u, v, w)`` with arcs ``u->v``, ``v->w`` but no ``u->w``."""
    for u, v in sorted(g.arcs):
        for w in g.succ[v]:
            if w != u and (u, w) not in g.arcs:
                return u, v, w
    return None


def find_umbrella(g: DiGraph, t: TopOrder) -> tuple[int, int, int] | None:
    """First umbrella ``(u, w, v)``: arc ``v->u``, ``u < w < v`` in the order,
    and neither ``w->u`` nor ``v->w``."""
    for v, u in sorted(g.arcs, key=lambda a: (t.pos[a[1]], t.pos[a[0]])):
        for p in range(t.pos[u] + 1, t.pos[v]):
            w = t.at(p)
            if (w, u) not in g.arcs and (v, w) not in g.arcs:
                return u, w, v
    return None


def is_umbrella_free(g: DiGraph, t: TopOrder) -> bool:
    return find_umbrella(g, t) is None


def ordered_isomorphic(g: DiGraph, t: TopOrder, s) -> bool:
    """Whether ``PermDAG(s)`` equals ``g`` when ``t_i`` is mapped to the vertex
    at position ``i`` of ``t``."""
    items = s.items if isinstance(s, Sequence) else tuple(s)
    n = g.n
    if len(items) != n or len(t) != n:
        return False
    expected = 0
    for j in range(n):
        vj = t.vertices[j]
        for i in range(j):
            want = items[i] <= items[j]
            expected += want
            if g.has_arc(vj, t.vertices[i]) != want:
                return False
    # arcs pointing forward in t would have been missed above
    return expected == g.m


def sequence_from_assignment(t: TopOrder, sigma: dict[int, int]) -> tuple[int, ...]:
    return tuple(sigma[v] for v in t.vertices)


__all__ = [
    "DiGraph",
    "TopOrder",
    "build_permdag",
    "find_transitivity_gap",
    "find_umbrella",
    "is_acyclic",
    "is_topological",
    "is_transitively_closed",
    "is_umbrella_free",
    "ordered_isomorphic",
]
