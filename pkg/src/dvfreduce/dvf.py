"""Discrete vector fields on GF(2) matrices and the relation they induce.

A pair ``(a, b)`` in a vector field pairs row ``a`` with column ``b``. Every
other row ``x`` with ``M[x][b] = 1`` gives a relation ``a > x``. The field is
admissible when these relations contain no loop.
"""

from __future__ import annotations

import graphlib
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BoundsError, FormatError
from .gf2core import Gf2Matrix, iter_bits

__all__ = [
    "VectorField",
    "RelationGraph",
    "is_discrete_vector_field",
    "gen_orders",
    "add_relations",
    "would_create_cycle",
    "induced_relation",
    "is_adm_vector_field",
    "parse_pairs",
    "format_pairs",
]


@dataclass(frozen=True)
class VectorField:
    """Ordered (row, col) pairs, in insertion order."""

    pairs: tuple[tuple[int, int], ...] = ()

    def __init__(self, pairs: Iterable[tuple[int, int]] = ()):
        object.__setattr__(self, "pairs", tuple((int(a), int(b)) for a, b in pairs))

    @classmethod
    def _trusted(cls, pairs):
        # skips int coercion for pairs built internally
        v = cls.__new__(cls)
        object.__setattr__(v, "pairs", tuple(pairs))
        return v

    def __len__(self):
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __contains__(self, pair):
        return tuple(pair) in self.pairs

    def rows(self) -> list[int]:
        return [a for a, _ in self.pairs]

    def cols(self) -> list[int]:
        return [b for _, b in self.pairs]

    def as_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.pairs)

    def append(self, a: int, b: int) -> VectorField:
        return VectorField(self.pairs + ((a, b),))


class RelationGraph:
    """Directed relation ``u > v`` on ``size`` row indices.

    Edges are kept as per-source target bitmasks. The transitive closure is
    kept as two more bitmask tables: ``_desc[u]`` holds every ``v`` reachable
    from ``u`` by a path of length >= 1, ``_anc[v]`` the reverse. Inserting
    edges from one source costs ``O(|ancestors| + |descendants|)`` mask ORs.
    """

    __slots__ = ("size", "_out", "_desc", "_anc")

    def __init__(self, size: int, edges: Iterable[tuple[int, int]] = ()):
        if size < 0:
            raise ValueError("negative relation size")
        self.size = size
        self._out = [0] * size
        self._desc = [0] * size
        self._anc = [0] * size
        by_src: dict[int, int] = {}
        for u, v in edges:
            self._check(u)
            self._check(v)
            by_src[u] = by_src.get(u, 0) | (1 << v)
        for u, mask in by_src.items():
            self._extend(u, mask)

    def copy(self) -> RelationGraph:
        g = RelationGraph.__new__(RelationGraph)
        g.size = self.size
        g._out = list(self._out)
        g._desc = list(self._desc)
        g._anc = list(self._anc)
        return g

    def _check(self, idx):
        if not 0 <= idx < self.size:
            raise BoundsError(f"row index {idx} outside relation of size {self.size}")

    def _extend(self, src: int, targets: int) -> None:
        # In place; ``targets`` is a bitmask. Only for graphs no caller holds yet.
        self._out[src] |= targets
        desc, anc = self._desc, self._anc
        reach = targets
        t = targets
        while t:
            low = t & -t
            t ^= low
            reach |= desc[low.bit_length() - 1]
        new = reach & ~desc[src]
        if not new:
            return
        sources = anc[src] | (1 << src)
        s = sources
        while s:
            low = s & -s
            s ^= low
            desc[low.bit_length() - 1] |= new
        while new:
            low = new & -new
            new ^= low
            anc[low.bit_length() - 1] |= sources

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u in range(self.size) for v in iter_bits(self._out[u]))

    @property
    def closure(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u in range(self.size) for v in iter_bits(self._desc[u]))

    def reaches(self, u: int, v: int) -> bool:
        """True iff there is a path of length >= 1 from ``u`` to ``v``."""
        self._check(u)
        self._check(v)
        return bool((self._desc[u] >> v) & 1)

    def descendants_mask(self, u: int) -> int:
        return self._desc[u]

    def ancestors_mask(self, v: int) -> int:
        return self._anc[v]

    def has_loop(self) -> bool:
        """Loop check read off the maintained closure."""
        return any((self._desc[u] >> u) & 1 for u in range(self.size))

    def add_relations(self, src: int, targets: Iterable[int]) -> RelationGraph:
        self._check(src)
        mask = 0
        for t in targets:
            self._check(t)
            mask |= 1 << t
        g = self.copy()
        g._extend(src, mask)
        return g

    def __eq__(self, other):
        if not isinstance(other, RelationGraph):
            return NotImplemented
        return self.size == other.size and self._out == other._out

    def __hash__(self):
        return hash((self.size, tuple(self._out)))

    def __repr__(self):
        return f"RelationGraph(size={self.size}, edges={sorted(self.edges)})"


def is_discrete_vector_field(M: Gf2Matrix, V: VectorField) -> bool:
    """Bounds, unit pivot entries and distinct rows/cols. Never raises."""
    rows, cols = V.rows(), V.cols()
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        return False
    for a, b in V:
        if not (0 <= a < M.nrows and 0 <= b < M.ncols):
            return False
        if not (M.bitrows[a] >> b) & 1:
            return False
    return True


def gen_orders(M: Gf2Matrix, i: int, j: int) -> frozenset[int]:
    """Rows ``x != i`` with ``M[x][j] = 1``: the targets of ``i > x``."""
    M._check(i, j)
    return frozenset(iter_bits(M.colmasks[j] & ~(1 << i)))


def add_relations(R: RelationGraph, src: int, targets: Iterable[int]) -> RelationGraph:
    return R.add_relations(src, targets)


def would_create_cycle(R: RelationGraph, src: int, targets: Iterable[int]) -> bool:
    mask = 0
    for t in targets:
        mask |= 1 << t
    if (mask >> src) & 1:
        return True
    return bool(R.ancestors_mask(src) & mask)


def induced_relation(M: Gf2Matrix, V: VectorField) -> RelationGraph:
    """Relation generated by every pair of ``V`` (``V`` must be in range)."""
    R = RelationGraph(M.nrows)
    for a, b in V:
        M._check(a, b)
        R._extend(a, M.colmasks[b] & ~(1 << a))
    return R


def _edges_acyclic(edges: Iterable[tuple[int, int]]) -> bool:
    ts = graphlib.TopologicalSorter()
    for u, v in edges:
        if u == v:
            return False
        ts.add(v, u)
    try:
        ts.prepare()
    except graphlib.CycleError:
        return False
    return True


def is_adm_vector_field(M: Gf2Matrix, V: VectorField, R: RelationGraph) -> bool:
    """``V`` is a vector field on ``M``, ``R`` is exactly its relation, and ``R`` is loop-free.

    Acyclicity is decided from ``R``'s edge set alone, not from its cached
    closure, so a corrupted closure cannot vouch for itself.
    """
    if not is_discrete_vector_field(M, V):
        return False
    if R.size != M.nrows:
        return False
    expected = set()
    for a, b in V:
        for x in iter_bits(M.colmasks[b] & ~(1 << a)):
            expected.add((a, x))
    edges = R.edges
    if expected != edges:
        return False
    return _edges_acyclic(edges)


def parse_pairs(text: str) -> list[tuple[int, int]]:
    """Parse one ``a b`` pair per line; blank and ``#`` lines are skipped."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError(f"expected 'a b' pair, got {line!r}", line=lineno)
        pairs.append((int(parts[0]), int(parts[1])))
    return pairs


def format_pairs(pairs: Iterable[tuple[int, int]], offset: int = 0) -> str:
    return "".join(f"{a + offset} {b + offset}\n" for a, b in pairs)
