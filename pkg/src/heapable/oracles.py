"""Exhaustive reference solvers.

Deliberately slow and independent of the main algorithms: they only read
vertex counts and raw arc / edge sets and do their own searching.  Used by the
tests and by the ``oracle`` CLI subcommand to regenerate fixtures.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass


class OracleBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_n: int
    max_millis: float = 60_000.0

    def check_size(self, n: int, what: str):
        if n > self.max_n:
            raise OracleBudgetExceeded(f"{what}: n={n} exceeds budget {self.max_n}")

    def deadline(self) -> float:
        return time.monotonic() + self.max_millis / 1000.0


def _tick(deadline: float):
    if time.monotonic() > deadline:
        raise OracleBudgetExceeded("oracle ran past its time budget")


# -- heapable subsequences ----------------------------------------------------


def brute_lhs(values, budget: OracleBudget = OracleBudget(12)) -> int:
    """Longest heapable subsequence by searching every skip/place decision.

    A heap is tracked only as the sorted multiset of values owning a free child
    slot (two slots per placed node); an element can be placed under any free
    slot whose owner is no larger.  The empty heap is a single slot that takes
    anything.
    """
    values = list(values)
    budget.check_size(len(values), "brute_lhs")
    deadline = budget.deadline()
    memo: dict = {}
    n = len(values)

    def best(i: int, slots: tuple) -> int:
        if i == n:
            return 0
        key = (i, slots)
        if key in memo:
            return memo[key]
        _tick(deadline)
        x = values[i]
        result = best(i + 1, slots)
        tried = set()
        for idx, owner in enumerate(slots):
            if owner in tried or not (owner is None or owner <= x):
                continue
            tried.add(owner)
            rest = list(slots[:idx] + slots[idx + 1:])
            rest += [x, x]
            rest.sort(key=lambda o: -math.inf if o is None else o)
            result = max(result, 1 + best(i + 1, tuple(rest)))
        memo[key] = result
        return result

    return best(0, (None,))


# -- directed binary trees --------------------------------------------------------


def brute_mbt_directed(g, budget: OracleBudget = OracleBudget(10)) -> int:
    """Largest in-tree (every vertex has a unique path to the root, at most two
    children per vertex), by growing all such trees from every root."""
    n = g.n
    budget.check_size(n, "brute_mbt_directed")
    if n == 0:
        return 0
    deadline = budget.deadline()
    into: dict[int, list[int]] = {v: [] for v in range(n)}
    for a, b in g.arcs:
        into[b].append(a)
    best = 1
    for root in range(n):
        seen = set()
        stack = [(frozenset([root]), {root: 0})]
        while stack:
            verts, kids = stack.pop()
            best = max(best, len(verts))
            if best == n:
                return n
            for u in verts:
                if kids[u] >= 2:
                    continue
                for w in into[u]:
                    if w in verts:
                        continue
                    key = (verts | {w}, tuple(sorted((x, kids[x] + (x == u)) for x in verts)))
                    if key in seen:
                        continue
                    seen.add(key)
                    _tick(deadline)
                    nk = dict(kids)
                    nk[u] += 1
                    nk[w] = 0
                    stack.append((verts | {w}, nk))
    return best


# -- undirected binary trees ------------------------------------------------------


def _subtree_search(n, edges, starts, cap, deadline):
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for e in edges:
        a, b = tuple(e)
        adj[a].append(b)
        adj[b].append(a)
    best_size, best_edges = 0, frozenset()
    seen: set[frozenset] = set()
    for r in starts:
        if best_size == 0:
            best_size, best_edges = 1, frozenset()
        stack = [(frozenset(), frozenset([r]))]
        while stack:
            es, vs = stack.pop()
            if len(vs) > best_size:
                best_size, best_edges = len(vs), es
            deg = {v: 0 for v in vs}
            for a, b in es:
                deg[a] += 1
                deg[b] += 1
            for u in vs:
                if deg[u] >= cap(u):
                    continue
                for w in adj[u]:
                    if w in vs:
                        continue
                    e = (min(u, w), max(u, w))
                    nes = es | {e}
                    if nes in seen:
                        continue
                    seen.add(nes)
                    _tick(deadline)
                    stack.append((nes, vs | {w}))
    return best_size, best_edges


def brute_mbt_undirected(g, budget: OracleBudget = OracleBudget(10)) -> int:
    """Most vertices in a connected acyclic subgraph with all degrees <= 3."""
    budget.check_size(g.n, "brute_mbt_undirected")
    return _subtree_search(g.n, g.edges, range(g.n), lambda v: 3, budget.deadline())[0]


def brute_mbt_rooted(g, root: int, budget: OracleBudget = OracleBudget(10)) -> int:
    """As above, but the tree must contain ``root`` and give it degree <= 2."""
    budget.check_size(g.n, "brute_mbt_rooted")
    cap = lambda v: 2 if v == root else 3  # noqa: E731
    return _subtree_search(g.n, g.edges, [root], cap, budget.deadline())[0]


# -- alphabet sizes ----------------------------------------------------------------


def _fits(arcs, order, tau, j) -> bool:
    vj = order[j]
    for i in range(j):
        if ((vj, order[i]) in arcs) != (tau[i] <= tau[j]):
            return False
    return True


def brute_gamma_alpha(g, order, k_max: int | None = None,
                      budget: OracleBudget = OracleBudget(6)) -> float:
    """Smallest ``k`` admitting ``tau`` in ``[k]^n`` whose permutation DAG is
    ``g`` under position ``i`` -> ``order[i]``; ``inf`` if none up to ``k_max``.

    ``order`` lists vertices by position (a ``TopOrder`` works too).
    """
    order = tuple(getattr(order, "vertices", order))
    n = g.n
    budget.check_size(n, "brute_gamma_alpha")
    if n == 0:
        return 0
    # any arc pointing forward in the order can never be produced
    pos = {v: i for i, v in enumerate(order)}
    if any(pos[a] < pos[b] for a, b in g.arcs):
        return math.inf
    k_max = n if k_max is None else k_max
    deadline = budget.deadline()
    arcs = frozenset(g.arcs)
    for k in range(1, k_max + 1):
        tau = [0] * n

        def extend(j: int) -> bool:
            if j == n:
                return True
            _tick(deadline)
            for label in range(1, k + 1):
                tau[j] = label
                if _fits(arcs, order, tau, j) and extend(j + 1):
                    return True
            return False

        if extend(0):
            return k
    return math.inf


def brute_alpha(g, budget: OracleBudget = OracleBudget(7)) -> float:
    """Minimum γ-alphabet size over every topological order of ``g``."""
    n = g.n
    budget.check_size(n, "brute_alpha")
    best = math.inf
    for perm in itertools.permutations(range(n)):
        pos = {v: i for i, v in enumerate(perm)}
        if any(pos[a] < pos[b] for a, b in g.arcs):
            continue
        k_max = n if best == math.inf else int(best) - 1
        if k_max < 1:
            break
        best = min(best, brute_gamma_alpha(g, perm, k_max, budget=budget))
    return best
