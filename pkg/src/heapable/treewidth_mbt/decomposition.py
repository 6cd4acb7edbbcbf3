"""Tree decompositions, their nice form, and the pendant-root variant."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable

from .graph import UGraph


@dataclass(frozen=True)
class TreeDecomposition:
    bags: dict  # node id -> frozenset of vertices
    tree: tuple[tuple[Hashable, Hashable], ...]

    def __init__(self, bags: dict, tree=()):
        object.__setattr__(self, "bags", {k: frozenset(b) for k, b in bags.items()})
        object.__setattr__(self, "tree", tuple(tuple(e) for e in tree))

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1

    def neighbours(self) -> dict:
        nb = {t: [] for t in self.bags}
        for a, b in self.tree:
            nb[a].append(b)
            nb[b].append(a)
        return nb


@dataclass(frozen=True)
class Violation:
    condition: str  # "T1", "T2", "T3" or "tree"
    message: str  # "{}" placeholders are filled with ``vertices``
    vertices: tuple = ()
    where: object = None  # offending bag id, if any

    def render(self, base: int = 0) -> str:
        text = self.message.format(*(v + base for v in self.vertices))
        return f"{self.condition} violated: {text}"

    def __str__(self):
        return self.render()


class InvalidDecomposition(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


def check_decomposition(g: UGraph, td: TreeDecomposition) -> Violation | None:
    """First violated condition, or ``None`` for a valid decomposition."""
    nodes = list(td.bags)
    if not nodes:
        return Violation("tree", "no bags")
    for a, b in td.tree:
        if a not in td.bags or b not in td.bags:
            return Violation("tree", "tree edge names an unknown bag", where=(a, b))
    if len(td.tree) != len(nodes) - 1 or len(_component(td, nodes[0], None)) != len(nodes):
        return Violation("tree", "bags do not form a tree")
    for t, bag in td.bags.items():
        bad = [v for v in bag if not 0 <= v < g.n]
        if bad:
            return Violation("T1", "bag holds unknown vertex {}", (bad[0],), t)
    # an uncovered edge is the more specific evidence, so it is reported first
    for u, v in sorted(g.edges):
        if not any(u in b and v in b for b in td.bags.values()):
            return Violation("T2", "edge {{{}, {}}} is in no bag", (u, v))
    covered = set().union(*td.bags.values())
    missing = sorted(set(range(g.n)) - covered)
    if missing:
        return Violation("T1", "vertex {} is in no bag", (missing[0],))
    for v in range(g.n):
        holding = [t for t, b in td.bags.items() if v in b]
        if len(_component(td, holding[0], v)) != len(holding):
            return Violation("T3", "bags holding vertex {} are not connected", (v,))
    return None


def is_valid(g: UGraph, td: TreeDecomposition) -> bool:
    return check_decomposition(g, td) is None


def _component(td: TreeDecomposition, start, v):
    nb = td.neighbours()
    seen, todo = {start}, [start]
    while todo:
        for t in nb[todo.pop()]:
            if t not in seen and (v is None or v in td.bags[t]):
                seen.add(t)
                todo.append(t)
    return seen


def heuristic_decomposition(g: UGraph) -> TreeDecomposition:
    """Min-degree elimination heuristic (no optimality claim)."""
    import networkx as nx
    from networkx.algorithms.approximation import treewidth_min_degree

    if g.n == 0:
        return TreeDecomposition({0: ()})
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    _, tree = treewidth_min_degree(nxg)
    ids = {bag: i for i, bag in enumerate(sorted(tree.nodes, key=lambda b: (sorted(b), len(b))))}
    bags = {i: bag for bag, i in ids.items()}
    edges = sorted((min(ids[a], ids[b]), max(ids[a], ids[b])) for a, b in tree.edges)
    return TreeDecomposition(bags, edges)


def path_decomposition(bags) -> TreeDecomposition:
    bags = list(bags)
    return TreeDecomposition(dict(enumerate(bags)), [(i, i + 1) for i in range(len(bags) - 1)])


def ladder_decomposition(rungs: int) -> TreeDecomposition:
    """Width-2 path decomposition of :func:`graph.ladder_graph`."""
    if rungs == 1:
        return path_decomposition([{0, 1}])
    bags = []
    for i in range(rungs - 1):
        a, b = 2 * i, 2 * i + 1
        bags += [{a, b, a + 2}, {b, a + 2, b + 2}]
    return path_decomposition(bags)


# -- nice decompositions ------------------------------------------------------------

LEAF, INTRO, INTRO_EDGE, DROP, JOIN = "leaf", "introduce", "introduce_edge", "drop", "join"


@dataclass(frozen=True)
class NiceNode:
    kind: str
    bag: frozenset
    children: tuple[int, ...] = ()
    vertex: int | None = None  # introduced or dropped vertex
    edge: tuple[int, int] | None = None


@dataclass(frozen=True)
class NiceDecomposition:
    """Nodes listed children-first; the last node is the root."""

    nodes: tuple[NiceNode, ...]

    @property
    def root(self) -> int:
        return len(self.nodes) - 1

    @property
    def width(self) -> int:
        return max(len(x.bag) for x in self.nodes) - 1

    def parents(self) -> list[int | None]:
        par = [None] * len(self.nodes)
        for i, node in enumerate(self.nodes):
            for c in node.children:
                par[c] = i
        return par

    def as_tree_decomposition(self) -> TreeDecomposition:
        bags = {i: x.bag for i, x in enumerate(self.nodes)}
        tree = [(c, i) for i, x in enumerate(self.nodes) for c in x.children]
        return TreeDecomposition(bags, tree)

    def drop_node(self, v: int) -> int:
        return next(i for i, x in enumerate(self.nodes) if x.kind == DROP and x.vertex == v)


class _Builder:
    def __init__(self):
        self.nodes: list[list] = []  # [kind, bag, children, vertex, edge]

    def add(self, kind, bag, children=(), vertex=None, edge=None) -> int:
        self.nodes.append([kind, frozenset(bag), list(children), vertex, edge])
        return len(self.nodes) - 1

    def freeze(self, root: int) -> NiceDecomposition:
        order, stack = [], [(root, False)]
        while stack:
            i, done = stack.pop()
            if done:
                order.append(i)
                continue
            stack.append((i, True))
            for c in reversed(self.nodes[i][2]):
                stack.append((c, False))
        new = {old: k for k, old in enumerate(order)}
        out = []
        for old in order:
            kind, bag, ch, v, e = self.nodes[old]
            out.append(NiceNode(kind, bag, tuple(new[c] for c in ch), v, e))
        return NiceDecomposition(tuple(out))


def _rooted_order(td: TreeDecomposition, root):
    nb = td.neighbours()
    parent = {root: None}
    order, todo = [], deque([root])
    while todo:
        t = todo.popleft()
        order.append(t)
        for c in sorted(nb[t], key=repr):
            if c not in parent:
                parent[c] = t
                todo.append(c)
    children = {t: [] for t in order}
    for t in order[1:]:
        children[parent[t]].append(t)
    return order, children


def make_nice(g: UGraph, td: TreeDecomposition, root=None) -> NiceDecomposition:
    """Nice decomposition of the same width, rooted at ``root`` (a bag id).

    Each edge is introduced directly below the drop node of the endpoint whose
    drop lies deeper in the tree; only there are both endpoints still in the bag.
    """
    bad = check_decomposition(g, td)
    if bad is not None:
        raise InvalidDecomposition(bad)
    if root is None:
        root = min(td.bags, key=repr)
    order, children = _rooted_order(td, root)
    b = _Builder()
    top = {}
    for t in reversed(order):
        bag = td.bags[t]
        tops = []
        for c in children[t]:
            cur, cbag = top[c], set(td.bags[c])
            for v in sorted(cbag - bag):
                cbag.discard(v)
                cur = b.add(DROP, cbag, [cur], vertex=v)
            for v in sorted(bag - cbag):
                cbag.add(v)
                cur = b.add(INTRO, cbag, [cur], vertex=v)
            tops.append(cur)
        if not tops:
            cur, cbag = b.add(LEAF, ()), set()
            for v in sorted(bag):
                cbag.add(v)
                cur = b.add(INTRO, cbag, [cur], vertex=v)
            tops.append(cur)
        acc = tops[0]
        for other in tops[1:]:
            acc = b.add(JOIN, bag, [acc, other])
        top[t] = acc
    cur, cbag = top[root], set(td.bags[root])
    for v in sorted(cbag):
        cbag.discard(v)
        cur = b.add(DROP, cbag, [cur], vertex=v)

    drop_at = {node[3]: i for i, node in enumerate(b.nodes) if node[0] == DROP}
    chains: dict[int, list] = {}
    for u, v in sorted(g.edges):
        du = drop_at[u]
        below = b.nodes[b.nodes[du][2][0]][1]
        d = du if v in below else drop_at[v]
        chains.setdefault(d, []).append((u, v))
    for d, edges in sorted(chains.items()):
        child = b.nodes[d][2][0]
        bag = b.nodes[child][1]
        cur = child
        for e in reversed(edges):
            cur = b.add(INTRO_EDGE, bag, [cur], edge=e)
        b.nodes[d][2] = [cur]
    return b.freeze(_find_root(b))


def _find_root(b: _Builder) -> int:
    has_parent = set()
    for node in b.nodes:
        has_parent.update(node[2])
    roots = [i for i in range(len(b.nodes)) if i not in has_parent]
    assert len(roots) == 1, roots
    return roots[0]


def nice_violation(g: UGraph, nd: NiceDecomposition, pendant: int | None = None) -> str | None:
    """Structural check of a nice (or, given ``pendant``, pendant-special)
    decomposition; returns a description of the first problem found."""
    bad = check_decomposition(g, nd.as_tree_decomposition())
    if bad is not None:
        return str(bad)
    base = frozenset() if pendant is None else frozenset([pendant])
    nodes = nd.nodes
    if nodes[nd.root].bag != base:
        return "root bag"
    for i, x in enumerate(nodes):
        if pendant is not None and pendant not in x.bag:
            return f"node {i} misses the pendant vertex"
        ch = [nodes[c].bag for c in x.children]
        if any(c >= i for c in x.children):
            return f"node {i} listed before a child"
        if x.kind == LEAF:
            ok = not ch and x.bag == base
        elif x.kind == INTRO:
            ok = len(ch) == 1 and x.vertex not in ch[0] and x.bag == ch[0] | {x.vertex}
        elif x.kind == DROP:
            ok = len(ch) == 1 and x.vertex in ch[0] and x.bag == ch[0] - {x.vertex}
        elif x.kind == INTRO_EDGE:
            ok = len(ch) == 1 and x.bag == ch[0] and set(x.edge) <= x.bag
        elif x.kind == JOIN:
            ok = len(ch) == 2 and ch[0] == x.bag == ch[1]
        else:
            ok = False
        if not ok:
            return f"node {i} ({x.kind}) malformed"
    introduced = [x.edge for x in nodes if x.kind == INTRO_EDGE]
    if sorted(introduced) != sorted(g.edges):
        return "edges not introduced exactly once"
    par = nd.parents()
    for i, x in enumerate(nodes):
        if x.kind != INTRO_EDGE:
            continue
        j = par[i]
        while nodes[j].kind == INTRO_EDGE:
            j = par[j]
        w = nodes[j].vertex
        if nodes[j].kind != DROP or w not in x.edge:
            return f"edge {x.edge} not in a chain below the drop of an endpoint"
        k = i
        while k != j:
            if w not in nodes[k].edge:
                return f"chain below drop of {w} holds {nodes[k].edge}"
            k = par[k]
    return None


def make_special(g: UGraph, nd: NiceDecomposition, s: int):
    """Add pendant ``s' = g.n`` on ``s``; put it in every bag and introduce the
    edge ``{s, s'}`` directly below the node that drops ``s``.

    Returns ``(g_s, decomposition, s')``.
    """
    if not 0 <= s < g.n:
        raise ValueError(f"vertex {s} not in graph")
    sp = g.n
    gs = g.add_vertices(1, [(s, sp)])
    b = _Builder()
    for x in nd.nodes:
        b.add(x.kind, x.bag | {sp}, x.children, x.vertex, x.edge)
    d = nd.drop_node(s)
    child = b.nodes[d][2][0]
    new = b.add(INTRO_EDGE, b.nodes[child][1], [child], edge=(s, sp))
    b.nodes[d][2] = [new]
    return gs, b.freeze(_find_root(b)), sp
