"""Longest heapable subsequence over a small alphabet.

A heap over labels ``1..k`` is summarised by how many free child slots hang
under each label (slot ``0`` is the virtual slot above an empty heap).  Once a
label ``j`` owns at least ``k - j + 1`` free slots, every later element with
label ``>= j`` can always be placed, so those counts are collapsed to
infinity.  The collapsed tuples ("refined shapes") number at most
``(k+1)! + 1``, which makes the dynamic program linear in ``n`` for fixed
``k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence as Seq

import numpy as np

INF = math.inf

# Infeasible marker inside the dense tables.  Values never go below zero
# otherwise, and relaxation skips masked entries, so this never overflows.
_NEG = np.iinfo(np.int32).min


@dataclass(frozen=True)
class Sequence:
    """Labels drawn from ``1..k``."""

    items: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"alphabet size must be positive, got {self.k}")
        for x in self.items:
            if not 1 <= x <= self.k:
                raise ValueError(f"label {x} outside 1..{self.k}")

    def __len__(self):
        return len(self.items)

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "Sequence":
        """Rank-compress arbitrary integers to ``1..k`` keeping their order."""
        values = list(values)
        rank = {v: i + 1 for i, v in enumerate(sorted(set(values)))}
        return cls(tuple(rank[v] for v in values), max(len(rank), 1))


def as_sequence(s) -> Sequence:
    if isinstance(s, Sequence):
        return s
    return Sequence.from_values(s)


# -- shapes -----------------------------------------------------------------


def empty_shape(k: int) -> tuple:
    return (1,) + (0,) * k


def refine(x: Seq, k: int) -> tuple:
    """Collapse every coordinate from the first saturated one onwards to INF."""
    x = tuple(x)
    if len(x) != k + 1:
        raise ValueError(f"shape needs {k + 1} coordinates, got {len(x)}")
    for j, xj in enumerate(x):
        if xj >= k - j + 1:
            return x[:j] + (INF,) * (k + 1 - j)
    return x


def insert_raw(x: Seq, a: int, b: int) -> tuple | None:
    """Exact slot counts after placing label ``b`` under a slot of label ``a``.

    Returns ``None`` when no slot of label ``a`` is free.
    """
    k = len(x) - 1
    if not 0 <= a <= b <= k:
        raise ValueError(f"need 0 <= a <= b <= {k}, got a={a}, b={b}")
    if x[a] == 0:
        return None
    y = list(x)
    if a == b:
        y[a] += 1
    else:
        y[a] -= 1
        y[b] += 2
    return tuple(y)


def insert(x: Seq, a: int, b: int) -> tuple | None:
    """Refined shape after placing ``b`` under ``a``, or ``None``."""
    y = insert_raw(x, a, b)
    return None if y is None else refine(y, len(x) - 1)


def is_refined_shape(x: Seq, k: int) -> bool:
    if len(x) != k + 1:
        return False
    seen_inf = False
    for j, xj in enumerate(x):
        if xj == INF:
            seen_inf = True
        elif seen_inf or not (isinstance(xj, int) and 0 <= xj <= k - j):
            return False
    return x[0] == 0 or tuple(x) == empty_shape(k)


def enumerate_refined_shapes(k: int) -> set[tuple]:
    """All refined shapes over ``1..k`` (``x_0`` is 0 except for the empty heap)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = {empty_shape(k)}

    def rec(prefix: list, j: int):
        if j > k:
            out.add(tuple(prefix))
            return
        rec(prefix + [INF] * (k + 1 - j), k + 1)
        for v in range(k - j + 1):
            rec(prefix + [v], j + 1)

    rec([0], 1)
    return out


def shape_index(x: Seq, k: int) -> int:
    """Mixed-radix code of a refined shape; the empty heap gets ``(k+1)!``."""
    if x[0] != 0:
        return math.factorial(k + 1)
    code = 0
    for j in range(1, k + 1):
        radix = k - j + 2
        code = code * radix + (radix - 1 if x[j] == INF else x[j])
    return code


def table_size(k: int) -> int:
    return math.factorial(k + 1) + 1


@lru_cache(maxsize=None)
def _transitions(k: int):
    """Per label ``v``: parallel arrays (src, tgt) of shape indices for every
    insertion of ``v`` under some label ``b <= v``."""
    shapes = sorted(enumerate_refined_shapes(k), key=lambda x: shape_index(x, k))
    trans = [None]
    for v in range(1, k + 1):
        src, tgt = [], []
        for x in shapes:
            i = shape_index(x, k)
            for b in range(v + 1):
                y = insert(x, b, v)
                if y is not None:
                    src.append(i)
                    tgt.append(shape_index(y, k))
        trans.append((np.array(src, dtype=np.intp), np.array(tgt, dtype=np.intp)))
    decode = {shape_index(x, k): x for x in shapes}
    return tuple(trans), decode


def prev_shapes(x: Seq, v: int, k: int | None = None) -> set[tuple]:
    """Refined shapes from which one insertion of ``v`` leads to ``x``.

    Inverts the insertion: for each parent label ``b <= v`` undo the slot
    bookkeeping, enumerating every raw count that refines back to ``x``.
    """
    x = tuple(x)
    k = len(x) - 1 if k is None else k
    if not 1 <= v <= k:
        raise ValueError(f"label {v} outside 1..{k}")
    valid = enumerate_refined_shapes(k)
    out = set()
    for b in range(v + 1):
        for cand in _undo_candidates(x, b, v, k):
            if cand in valid and insert(cand, b, v) == x:
                out.add(cand)
    return out


def _undo_candidates(x: tuple, b: int, v: int, k: int):
    # An INF coordinate may have come from any value large enough to saturate
    # or from INF itself; finite ones are pinned by the arithmetic of insert.
    choices = []
    for j, xj in enumerate(x):
        delta = 0
        if j == b:
            delta += -1 if b == v else 1  # net change of x_b was +1 / -1
        if j == v and b != v:
            delta -= 2
        if xj == INF:
            choices.append([INF] + list(range(0, k - j + 1)))
        else:
            y = xj + delta
            if y < 0:
                return
            choices.append([y])
    stack = [()]
    for opts in choices:
        stack = [p + (o,) for p in stack for o in opts]
    yield from stack


# -- dynamic program --------------------------------------------------------


@dataclass
class LhsTable:
    """All ``n + 1`` layers of the shape table for one input."""

    k: int
    layers: np.ndarray  # (n + 1, table_size(k)), _NEG where infeasible

    def value(self, i: int, x: Seq) -> float:
        v = self.layers[i, shape_index(x, self.k)]
        return -INF if v == _NEG else int(v)

    def reachable(self, i: int | None = None) -> set[tuple]:
        _, decode = _transitions(self.k)
        row = self.layers[-1 if i is None else i]
        return {decode[j] for j in np.flatnonzero(row != _NEG)}

    @property
    def length(self) -> int:
        return int(self.layers[-1].max())


def _relax(old: np.ndarray, src: np.ndarray, tgt: np.ndarray) -> np.ndarray:
    new = old.copy()
    vals = old[src]
    ok = vals != _NEG
    np.maximum.at(new, tgt[ok], vals[ok] + 1)
    return new


def lhs_dp(s) -> tuple[int, LhsTable]:
    """Length of a longest heapable subsequence and the full DP table."""
    s = as_sequence(s)
    k = s.k
    trans, _ = _transitions(k)
    layers = np.full((len(s) + 1, table_size(k)), _NEG, dtype=np.int32)
    layers[0, shape_index(empty_shape(k), k)] = 0
    for i, a in enumerate(s.items, start=1):
        src, tgt = trans[a]
        layers[i] = _relax(layers[i - 1], src, tgt)
    table = LhsTable(k, layers)
    return table.length, table


def lhs_reconstruct(table: LhsTable, s) -> list[int]:
    """0-based indices of one longest heapable subsequence, by backtracking."""
    s = as_sequence(s)
    trans, _ = _transitions(table.k)
    L = table.layers
    x = int(np.argmax(L[-1]))
    picked = []
    for i in range(len(s), 0, -1):
        val = L[i, x]
        if L[i - 1, x] == val:
            continue
        src, tgt = trans[s.items[i - 1]]
        cand = src[(tgt == x) & (L[i - 1, src] == val - 1)]
        x = int(cand[0])
        picked.append(i - 1)
    assert L[0, x] == 0
    return picked[::-1]


def longest_heapable_subsequence(values) -> list[int]:
    """Convenience: the values of one longest heapable subsequence."""
    s = as_sequence(values)
    _, table = lhs_dp(s)
    values = list(values.items if isinstance(values, Sequence) else values)
    return [values[i] for i in lhs_reconstruct(table, s)]


def is_heapable(s) -> bool:
    s = as_sequence(s)
    return lhs_dp(s)[0] == len(s)


class LhsStream:
    """Length-only LHS over a stream of labels in ``1..k``.

    Holds two shape tables and nothing that grows with the input.
    """

    __slots__ = ("k", "_cur", "_next")

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("k must be >= 1")
        self.k = k
        self._cur = np.full(table_size(k), _NEG, dtype=np.int64)
        self._next = np.empty_like(self._cur)
        self._cur[shape_index(empty_shape(k), k)] = 0

    def feed(self, label: int) -> int:
        if not 1 <= label <= self.k:
            raise ValueError(f"label {label} outside 1..{self.k}")
        src, tgt = _transitions(self.k)[0][label]
        np.copyto(self._next, self._cur)
        vals = self._cur[src]
        ok = vals != _NEG
        np.maximum.at(self._next, tgt[ok], vals[ok] + 1)
        self._cur, self._next = self._next, self._cur
        return self.current_length()

    def current_length(self) -> int:
        return int(self._cur.max())

    @property
    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        return self._cur, self._next


def lhs_stream(k: int) -> LhsStream:
    return LhsStream(k)
