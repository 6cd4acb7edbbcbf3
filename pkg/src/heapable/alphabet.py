"""γ-alphabet size of a permutation DAG under a fixed topological order.

Three independent routes to the same number:

* :func:`greedy_assign` repeatedly removes the leftmost vertex that receives
  an arc from every later vertex, bumping the label whenever the removed
  vertex lies left of the previous one;
* :func:`minmax_alpha` takes one plus the heaviest path in the tournament that
  adds a weight-1 forward arc for every missing backward arc;
* :func:`polyhedron_feasible` / :func:`min_alpha_lp` solve the label
  inequalities as a system of difference constraints with Bellman-Ford.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter

from .permdag import (
    DiGraph,
    TopOrder,
    find_transitivity_gap,
    find_umbrella,
    is_topological,
)


class NotTopologicalError(ValueError):
    pass


class NotUmbrellaFreeError(ValueError):
    """The order admits no labelling (its α is infinite)."""


@dataclass(frozen=True)
class Assignment:
    """Labels per vertex.  ``alpha`` is ``math.inf`` when no labelling exists,
    in which case ``sigma`` is ``None`` and ``obstruction`` says why."""

    sigma: dict[int, int] | None
    alpha: int | float
    order: tuple[int, ...] = ()  # processing order v_1..v_n
    obstruction: tuple | None = None

    @property
    def finite(self) -> bool:
        return self.alpha != math.inf

    def as_sequence(self, t: TopOrder) -> tuple[int, ...]:
        return tuple(self.sigma[v] for v in t.vertices)


def _require_topological(g: DiGraph, t: TopOrder):
    if not is_topological(g, t):
        raise NotTopologicalError("ordering is not a topological order of the graph")


def obstruction(g: DiGraph, t: TopOrder) -> tuple | None:
    """``("transitivity", u, v, w)`` or ``("umbrella", u, w, v)``, or ``None``."""
    gap = find_transitivity_gap(g)
    if gap is not None:
        return ("transitivity",) + gap
    umb = find_umbrella(g, t)
    if umb is not None:
        return ("umbrella",) + umb
    return None


def fully_suffix_connected(g: DiGraph, t: TopOrder) -> list[int]:
    n = g.n
    return [v for v in t.vertices if len(g.pred[v]) == n - t.pos[v]]


def lfsc(g: DiGraph, t: TopOrder) -> int:
    """Leftmost vertex receiving an arc from every vertex after it."""
    if g.n == 0:
        raise ValueError("empty graph has no fully suffix connected vertex")
    _require_topological(g, t)
    # under a topological order all in-arcs come from later vertices
    return fully_suffix_connected(g, t)[0]


def greedy_assign(g: DiGraph, t: TopOrder) -> Assignment:
    _require_topological(g, t)
    obs = obstruction(g, t)
    if obs is not None:
        return Assignment(None, math.inf, obstruction=obs)
    n = g.n
    # missing[u]: remaining vertices after u (in t) with no arc into u
    missing = {u: (n - t.pos[u]) - len(g.pred[u]) for u in range(n)}
    alive = list(t.vertices)
    sigma: dict[int, int] = {}
    processed = []
    alpha, prev_pos = 1, -math.inf
    for _ in range(n):
        v = next(u for u in alive if missing[u] == 0)
        if t.pos[v] < prev_pos:
            alpha += 1
        sigma[v] = alpha
        processed.append(v)
        prev_pos = t.pos[v]
        alive.remove(v)
        for u in alive:
            if t.pos[u] < t.pos[v] and not g.has_arc(v, u):
                missing[u] -= 1
    return Assignment(sigma, alpha if n else 0, tuple(processed))


# -- tournament and min-max certificate -----------------------------------------


@dataclass(frozen=True)
class Tournament:
    base: frozenset[tuple[int, int]]  # the DAG's own arcs, weight 0
    forward: frozenset[tuple[int, int]]  # missing pairs, oriented forward, weight 1
    n: int = 0
    adj: dict = field(default=None, compare=False, repr=False)

    def weight(self, u: int, v: int) -> int:
        if (u, v) in self.base:
            return 0
        if (u, v) in self.forward:
            return 1
        raise KeyError((u, v))

    def arcs(self):
        return self.base | self.forward


def build_tournament(g: DiGraph, t: TopOrder) -> Tournament:
    _require_topological(g, t)
    forward = set()
    for j in range(g.n):
        for i in range(j):
            u, v = t.vertices[i], t.vertices[j]
            if not g.has_arc(v, u):
                forward.add((u, v))
    for j in range(g.n):
        for i in range(j):
            u, v = t.vertices[i], t.vertices[j]
            assert ((v, u) in g.arcs) != ((u, v) in forward)
    adj = {v: [] for v in range(g.n)}
    for u, v in sorted(g.arcs | forward):
        adj[u].append(v)
    return Tournament(g.arcs, frozenset(forward), g.n, adj)


def path_weight(h: Tournament, path) -> int:
    return sum(h.weight(a, b) for a, b in zip(path, path[1:]))


def minmax_alpha(g: DiGraph, t: TopOrder) -> tuple[int, list[int]]:
    """``1 +`` the heaviest path weight in the tournament, with that path."""
    h = build_tournament(g, t)
    if g.n == 0:
        return 0, []
    preds = {v: [] for v in range(g.n)}
    for u, vs in h.adj.items():
        for v in vs:
            preds[v].append(u)
    try:
        topo = list(TopologicalSorter({v: preds[v] for v in range(g.n)}).static_order())
    except CycleError as exc:
        raise NotUmbrellaFreeError(f"tournament has a cycle: {exc.args[1]}") from exc
    best = {}
    back = {}
    for v in topo:
        best[v], back[v] = 0, None
        for u in sorted(preds[v]):
            w = best[u] + h.weight(u, v)
            if w > best[v]:
                best[v], back[v] = w, u
    end = min(range(g.n), key=lambda v: (-best[v], v))
    path = [end]
    while back[path[-1]] is not None:
        path.append(back[path[-1]])
    path.reverse()
    return 1 + best[end], path


# -- difference constraints -----------------------------------------------------


@dataclass(frozen=True)
class DiffConstraint:
    """``x[i] - x[j] <= c``; index 0 is the constant zero, 1..n are positions."""

    i: int
    j: int
    c: int

    def holds(self, x) -> bool:
        xs = (0,) + tuple(x)
        return xs[self.i] - xs[self.j] <= self.c

    def __str__(self):
        name = lambda p: "0" if p == 0 else f"x{p}"  # noqa: E731
        return f"{name(self.i)} - {name(self.j)} <= {self.c}"


def label_constraints(g: DiGraph, t: TopOrder) -> list[DiffConstraint]:
    """Inequalities over position-indexed labels whose integer points are
    exactly the sequences realising ``g`` under ``t``."""
    out = []
    n = g.n
    for q in range(1, n + 1):
        for p in range(1, q):
            u, v = t.at(p), t.at(q)
            if g.has_arc(v, u):
                out.append(DiffConstraint(p, q, 0))  # x_p <= x_q
            else:
                out.append(DiffConstraint(q, p, -1))  # x_q <= x_p - 1
    for p in range(1, n + 1):
        out.append(DiffConstraint(0, p, -1))  # x_p >= 1
    return out


def solve_difference_constraints(n: int, cons: list[DiffConstraint]):
    """Bellman-Ford on ``y = -x`` from the zero node.

    Returns ``(True, x)`` with the componentwise least solution (all entries
    integral), or ``(False, cycle)`` listing constraints that sum to
    ``0 <= negative``.
    """
    # x_i - x_j <= c  <=>  y_j - y_i <= c : edge i -> j with weight c
    edges = [(k.i, k.j, k.c, k) for k in cons]
    dist = [math.inf] * (n + 1)
    dist[0] = 0
    via = [None] * (n + 1)
    last = None
    for _ in range(n + 1):
        last = None
        for a, b, c, k in edges:
            if dist[a] + c < dist[b]:
                dist[b] = dist[a] + c
                via[b] = k
                last = b
        if last is None:
            break
    if last is None:
        return True, tuple(-int(d) for d in dist[1:])
    # walk back n+1 steps to land on the cycle, then collect it
    node = last
    for _ in range(n + 1):
        node = via[node].i
    cycle, cur = [], node
    while True:
        k = via[cur]
        cycle.append(k)
        cur = k.i
        if cur == node:
            break
    cycle.reverse()
    return False, cycle


def polyhedron_feasible(g: DiGraph, t: TopOrder):
    _require_topological(g, t)
    return solve_difference_constraints(g.n, label_constraints(g, t))


def min_alpha_lp(g: DiGraph, t: TopOrder) -> int | float:
    """Minimum label of an added vertex that every vertex points to.

    The vertex goes last in the order, so it bounds every label from above;
    its least feasible value is the γ-alphabet size (``inf`` if infeasible).
    """
    _require_topological(g, t)
    n = g.n
    top = n
    g2 = DiGraph(n + 1, list(g.arcs) + [(top, u) for u in range(n)])
    t2 = TopOrder(t.vertices + (top,))
    ok, res = solve_difference_constraints(n + 1, label_constraints(g2, t2))
    if not ok:
        return math.inf
    return res[n] if n else 0
