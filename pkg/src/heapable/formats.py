"""Plain-text readers and writers.

Vertex ids in files are 1-based; everything in memory is 0-based.
"""

from __future__ import annotations

from typing import Iterable, TextIO

from .permdag import DiGraph, TopOrder
from .treewidth_mbt import TreeDecomposition, UGraph


class FormatError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        super().__init__(f"line {line}: {msg}" if line is not None else msg)
        self.line = line


def _lines(src: str | Iterable[str]):
    if isinstance(src, str):
        src = src.splitlines()
    for no, raw in enumerate(src, start=1):
        yield no, raw.strip()


def _ints(tokens, no, what="integer"):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected {what}s, got {' '.join(tokens)!r}", no) from None


# -- sequences ----------------------------------------------------------------------


def parse_sequences(src) -> list[list[int]]:
    """One sequence per line; blank lines and ``#`` comments skipped."""
    out = []
    for no, line in _lines(src):
        if not line or line.startswith("#"):
            continue
        vals = _ints(line.split(), no)
        if any(v < 1 for v in vals):
            raise FormatError("labels must be positive integers", no)
        out.append(vals)
    return out


def iter_labels(stream: TextIO):
    """Labels one at a time, for streaming use."""
    for no, line in enumerate(stream, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        for v in _ints(line.split(), no):
            if v < 1:
                raise FormatError("labels must be positive integers", no)
            yield v


def format_sequence(values) -> str:
    return " ".join(str(v) for v in values)


# -- directed graphs ----------------------------------------------------------------


def parse_dag(src) -> tuple[DiGraph, TopOrder | None]:
    """``p dag n m`` header, ``a u v`` arcs, optional ``o v1 .. vn`` order."""
    n = m = None
    arcs, order = [], None
    for no, line in _lines(src):
        if not line or line.startswith("c") or line.startswith("#"):
            continue
        tok = line.split()
        if tok[0] == "p":
            if len(tok) != 4 or tok[1] != "dag":
                raise FormatError("header must be 'p dag <n> <m>'", no)
            if n is not None:
                raise FormatError("second header", no)
            n, m = _ints(tok[2:], no)
        elif n is None:
            raise FormatError("data before 'p dag' header", no)
        elif tok[0] == "a":
            if len(tok) != 3:
                raise FormatError("arc line must be 'a <from> <to>'", no)
            u, v = _ints(tok[1:], no)
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"vertex outside 1..{n}", no)
            if u == v:
                raise FormatError("self-loop", no)
            arcs.append((u - 1, v - 1))
        elif tok[0] == "o":
            order = _parse_order_tokens(tok[1:], n, no)
        else:
            raise FormatError(f"unknown line type {tok[0]!r}", no)
    if n is None:
        raise FormatError("missing 'p dag' header")
    if len(set(arcs)) != m or len(arcs) != m:
        raise FormatError(f"header promises {m} distinct arcs, found {len(set(arcs))} in {len(arcs)} lines")
    return DiGraph(n, arcs), order


def _parse_order_tokens(tokens, n, no) -> TopOrder:
    vs = _ints(tokens, no)
    if sorted(vs) != list(range(1, n + 1)):
        raise FormatError(f"order must list each of 1..{n} once", no)
    return TopOrder(v - 1 for v in vs)


def parse_order(src, n: int) -> TopOrder:
    """Order file: an ``o`` line (the ``o`` is optional)."""
    for no, line in _lines(src):
        if not line or line.startswith("c") or line.startswith("#"):
            continue
        tok = line.split()
        return _parse_order_tokens(tok[1:] if tok[0] == "o" else tok, n, no)
    raise FormatError("no ordering found")


def format_dag(g: DiGraph) -> str:
    lines = [f"p dag {g.n} {g.m}"]
    lines += [f"a {u + 1} {v + 1}" for u, v in sorted(g.arcs, key=lambda a: (a[0], a[1]))]
    return "\n".join(lines)


# -- undirected graphs and decompositions ----------------------------------------------


def parse_ugraph(src) -> UGraph:
    """PACE ``p tw n m`` header followed by ``u v`` edge lines."""
    n = m = None
    edges = []
    for no, line in _lines(src):
        if not line or line.startswith("c") or line.startswith("#"):
            continue
        tok = line.split()
        if tok[0] == "p":
            if len(tok) != 4 or tok[1] != "tw":
                raise FormatError("header must be 'p tw <n> <m>'", no)
            if n is not None:
                raise FormatError("second header", no)
            n, m = _ints(tok[2:], no)
            continue
        if n is None:
            raise FormatError("edge before 'p tw' header", no)
        if len(tok) != 2:
            raise FormatError("edge line must be '<u> <v>'", no)
        u, v = _ints(tok, no)
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"vertex outside 1..{n}", no)
        if u == v:
            raise FormatError("self-loop", no)
        edges.append((u - 1, v - 1))
    if n is None:
        raise FormatError("missing 'p tw' header")
    g = UGraph(n, edges)
    if g.m != m or len(edges) != m:
        raise FormatError(f"header promises {m} distinct edges, found {g.m} in {len(edges)} lines")
    return g


def format_ugraph(g: UGraph) -> str:
    return "\n".join([f"p tw {g.n} {g.m}"] + [f"{u + 1} {v + 1}" for u, v in sorted(g.edges)])


def parse_td(src, n: int | None = None) -> TreeDecomposition:
    """PACE ``.td``: ``s td <bags> <max bag> <n>``, ``b id v..`` lines, tree edges."""
    header = None
    bags: dict[int, set] = {}
    tree = []
    for no, line in _lines(src):
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        if tok[0] == "s":
            if len(tok) != 5 or tok[1] != "td":
                raise FormatError("header must be 's td <bags> <max bag size> <n>'", no)
            header = _ints(tok[2:], no)
        elif header is None:
            raise FormatError("data before 's td' header", no)
        elif tok[0] == "b":
            ids = _ints(tok[1:], no)
            if not ids:
                raise FormatError("bag line needs an id", no)
            bid, vs = ids[0], ids[1:]
            if bid in bags:
                raise FormatError(f"bag {bid} defined twice", no)
            if not 1 <= bid <= header[0]:
                raise FormatError(f"bag id outside 1..{header[0]}", no)
            if any(not 1 <= v <= header[2] for v in vs):
                raise FormatError(f"vertex outside 1..{header[2]}", no)
            bags[bid] = {v - 1 for v in vs}
        else:
            if len(tok) != 2:
                raise FormatError("tree edge must be '<bag> <bag>'", no)
            tree.append(tuple(_ints(tok, no)))
    if header is None:
        raise FormatError("missing 's td' header")
    nb, _, nv = header
    if len(bags) != nb:
        raise FormatError(f"header promises {nb} bags, found {len(bags)}")
    if n is not None and nv != n:
        raise FormatError(f"decomposition is for {nv} vertices, graph has {n}")
    return TreeDecomposition(bags, tree)


def format_td(td: TreeDecomposition, n: int) -> str:
    ids = {t: i + 1 for i, t in enumerate(sorted(td.bags, key=repr))}
    lines = [f"s td {len(ids)} {td.width + 1} {n}"]
    for t, i in ids.items():
        lines.append(" ".join(["b", str(i)] + [str(v + 1) for v in sorted(td.bags[t])]))
    lines += [f"{ids[a]} {ids[b]}" for a, b in td.tree]
    return "\n".join(lines)


# -- fixtures ---------------------------------------------------------------------------


def parse_fixture(src) -> list[tuple[str, str]]:
    """``input -> value`` lines."""
    out = []
    for no, line in _lines(src):
        if not line or line.startswith("#"):
            continue
        if "->" not in line:
            raise FormatError("fixture line needs '->'", no)
        lhs, rhs = line.rsplit("->", 1)
        out.append((lhs.strip(), rhs.strip()))
    return out


def encode_ugraph(g: UGraph) -> str:
    """Compact one-line form ``n: u-v u-v ...`` (0-based) for fixtures."""
    return f"{g.n}: " + " ".join(f"{u}-{v}" for u, v in sorted(g.edges))


def decode_ugraph(text: str) -> UGraph:
    head, _, body = text.partition(":")
    edges = [tuple(int(x) for x in e.split("-")) for e in body.split()]
    return UGraph(int(head), edges)
