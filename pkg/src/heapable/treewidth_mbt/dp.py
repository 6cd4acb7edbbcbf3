"""Maximum binary tree through a pendant-special nice decomposition.

A state at a node is ``(X, P, D)``: the bag vertices used by a partial forest,
which forest component each one lies in, and each one's degree.  Keys are
``(verts, parts, degs)`` with ``verts`` sorted and ``parts`` a restricted
growth string over ``verts``, so equal states always compare equal.  Each
table maps a key to ``(edges, back)`` where ``back`` names the producing child
key(s) and the edge taken, if any.  Infeasible states are simply absent.
"""

from __future__ import annotations

import gc
from bisect import bisect_left
from contextlib import contextmanager
from dataclasses import dataclass, field

from .decomposition import DROP, INTRO, INTRO_EDGE, JOIN, LEAF, NiceDecomposition
from .graph import UGraph

MAX_DEG = 3


def canon(parts) -> tuple[int, ...]:
    """Relabel part ids in order of first appearance."""
    ren: dict[int, int] = {}
    return tuple(ren.setdefault(p, len(ren)) for p in parts)


def partition_sets(verts, parts) -> list[frozenset]:
    groups: dict[int, set] = {}
    for v, p in zip(verts, parts):
        groups.setdefault(p, set()).add(v)
    return [frozenset(groups[p]) for p in sorted(groups)]


def rgs_partitions(n: int):
    """Every partition of ``n`` items as a restricted growth string."""
    if n == 0:
        yield ()
        return

    def rec(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for p in range(top + 2):
            yield from rec(prefix + [p], max(top, p))

    yield from rec([0], 0)


def merge_parts(pj, pk) -> tuple[int, ...] | None:
    """Component partition of the bipartite vertex/part graph built from two
    partitions of the same items, or ``None`` if that graph has a cycle."""
    n = len(pj)
    nj = max(pj, default=-1) + 1
    uf = list(range(n + nj + max(pk, default=-1) + 1))

    def find(a):
        while uf[a] != a:
            uf[a] = uf[uf[a]]
            a = uf[a]
        return a

    for i in range(n):
        for part_node in (n + pj[i], n + nj + pk[i]):
            a, b = find(i), find(part_node)
            if a == b:
                return None
            uf[a] = b
    return canon(find(i) for i in range(n))


def join_partition(pj_sets, pk_sets):
    """Set-level wrapper of :func:`merge_parts`: ``(is_forest, parts)``."""
    verts = sorted(set().union(*pj_sets))
    if verts != sorted(set().union(*pk_sets)):
        raise ValueError("partitions cover different sets")
    idx = {v: i for i, v in enumerate(verts)}
    pj, pk = [0] * len(verts), [0] * len(verts)
    for p, part in enumerate(pj_sets):
        for v in part:
            pj[idx[v]] = p
    for p, part in enumerate(pk_sets):
        for v in part:
            pk[idx[v]] = p
    merged = merge_parts(canon(pj), canon(pk))
    if merged is None:
        return False, None
    return True, partition_sets(verts, merged)


@dataclass
class MbtResult:
    edges: int
    tree: list[tuple[int, int]]
    state_counts: list[int]
    tables: list[dict] | None = field(default=None, repr=False)

    def lookup(self, node: int, parts_by_set, degree: dict):
        """Table value at ``node`` for a state given as a list of vertex sets
        and a degree map; ``None`` when the state is infeasible."""
        verts = tuple(sorted(degree))
        owner = {v: p for p, part in enumerate(parts_by_set) for v in part}
        key = (verts, canon(owner[v] for v in verts), tuple(degree[v] for v in verts))
        hit = self.tables[node].get(key)
        return None if hit is None else hit[0]


class NoBinaryTree(ValueError):
    pass


def _offer(table, key, value, back):
    old = table.get(key)
    if old is None or value > old[0]:
        table[key] = (value, back)


def _subtree(nd: NiceDecomposition, i: int):
    verts, edges, todo = set(), set(), [i]
    while todo:
        x = nd.nodes[todo.pop()]
        verts |= x.bag
        if x.kind == INTRO_EDGE:
            edges.add(x.edge)
        todo.extend(x.children)
    return verts, edges


def _check_join(nd: NiceDecomposition, i: int):
    x = nd.nodes[i]
    vj, ej = _subtree(nd, x.children[0])
    vk, ek = _subtree(nd, x.children[1])
    if (vj - x.bag) & (vk - x.bag) or ej & ek:
        raise AssertionError(f"join node {i}: child subtrees overlap")


@contextmanager
def _no_cyclic_gc():
    # The tables hold many small tuples but never a reference cycle.  Left on,
    # the collector rescans all of them again and again, and the run stops
    # being linear in the number of nodes.
    was_on = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_on:
            gc.enable()


def mbt_dp(gs: UGraph, sd: NiceDecomposition, sp: int,
           check_join_disjointness: bool = True, keep_tables: bool = False) -> MbtResult:
    """Edges of a largest binary tree of ``gs`` in which ``sp`` has degree 1."""
    with _no_cyclic_gc():
        return _mbt_dp(gs, sd, sp, check_join_disjointness, keep_tables)


def _mbt_dp(gs, sd, sp, check_join_disjointness, keep_tables) -> MbtResult:
    tables: list[dict] = []
    merge_memo: dict = {}
    for i, x in enumerate(sd.nodes):
        t: dict = {}
        if x.kind == LEAF:
            t[((sp,), (0,), (0,))] = (0, None)
        elif x.kind == INTRO:
            v = x.vertex
            for key, (val, _) in tables[x.children[0]].items():
                verts, parts, degs = key
                _offer(t, key, val, ((key,), None))
                p = bisect_left(verts, v)
                nparts = canon(parts[:p] + (len(verts),) + parts[p:])
                nkey = (verts[:p] + (v,) + verts[p:], nparts, degs[:p] + (0,) + degs[p:])
                _offer(t, nkey, val, ((key,), None))
        elif x.kind == INTRO_EDGE:
            u, v = x.edge
            for key, (val, _) in tables[x.children[0]].items():
                _offer(t, key, val, ((key,), None))
            for key, (val, _) in tables[x.children[0]].items():
                verts, parts, degs = key
                iu, iv = bisect_left(verts, u), bisect_left(verts, v)
                if iu == len(verts) or verts[iu] != u or iv == len(verts) or verts[iv] != v:
                    continue
                if parts[iu] == parts[iv] or degs[iu] >= MAX_DEG or degs[iv] >= MAX_DEG:
                    continue
                old = parts[iv]
                nparts = canon(parts[iu] if p == old else p for p in parts)
                nds = list(degs)
                nds[iu] += 1
                nds[iv] += 1
                _offer(t, (verts, nparts, tuple(nds)), val + 1, ((key,), x.edge))
        elif x.kind == DROP:
            v = x.vertex
            for key, (val, _) in tables[x.children[0]].items():
                verts, parts, degs = key
                p = bisect_left(verts, v)
                if p == len(verts) or verts[p] != v:
                    _offer(t, key, val, ((key,), None))
                    continue
                if degs[p] == 0 or parts.count(parts[p]) < 2:
                    continue
                nkey = (verts[:p] + verts[p + 1:], canon(parts[:p] + parts[p + 1:]),
                        degs[:p] + degs[p + 1:])
                _offer(t, nkey, val, ((key,), None))
        elif x.kind == JOIN:
            if check_join_disjointness:
                _check_join(sd, i)
            a, b = tables[x.children[0]], tables[x.children[1]]
            by_verts: dict = {}
            for key in b:
                by_verts.setdefault(key[0], []).append(key)
            for kj, (vj, _) in a.items():
                verts, pj, dj = kj
                for kk in by_verts.get(verts, ()):
                    dk = kk[2]
                    degs = tuple(p + q for p, q in zip(dj, dk))
                    if max(degs) > MAX_DEG:
                        continue
                    mk = (pj, kk[1])
                    if mk not in merge_memo:
                        merge_memo[mk] = merge_parts(*mk)
                    parts = merge_memo[mk]
                    if parts is None:
                        continue
                    _offer(t, (verts, parts, degs), vj + b[kk][0], ((kj, kk), None))
        else:
            raise ValueError(f"unknown node kind {x.kind}")
        tables.append(t)

    goal = ((sp,), (0,), (1,))
    if goal not in tables[sd.root]:
        raise NoBinaryTree("no binary tree containing the pendant root")
    edges = tables[sd.root][goal][0]
    tree = []
    todo = [(sd.root, goal)]
    while todo:
        i, key = todo.pop()
        _, back = tables[i][key]
        if back is None:
            continue
        keys, edge = back
        if edge is not None:
            tree.append(edge)
        for c, k in zip(sd.nodes[i].children, keys):
            todo.append((c, k))
    assert len(tree) == edges
    return MbtResult(edges, sorted(tree), [len(t) for t in tables],
                     tables if keep_tables else None)
