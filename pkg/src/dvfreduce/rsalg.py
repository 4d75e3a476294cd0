"""Constructors of admissible discrete vector fields.

``rs_generate`` is the Romero-Sergeraert row scan. ``generate_with_strategy``
is the generic greedy loop: at each step it offers the pairs whose addition
keeps the field admissible and lets a strategy choose one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from .dvf import RelationGraph, VectorField
from .gf2core import Gf2Matrix, iter_bits

__all__ = [
    "DvfResult",
    "PickStrategy",
    "rs_generate",
    "generate_with_strategy",
    "admissible_candidates",
    "rs_strategy",
    "none_strategy",
    "random_strategy",
]

Pair = tuple[int, int]
PickStrategy = Callable[[Gf2Matrix, VectorField, RelationGraph, Iterable[Pair]], Optional[Pair]]


@dataclass(frozen=True)
class DvfResult:
    field: VectorField
    relation: RelationGraph

    def __iter__(self):
        # allows ``V, R = rs_generate(M)``
        return iter((self.field, self.relation))


def rs_generate(M: Gf2Matrix) -> DvfResult:
    """Scan rows top to bottom; in each row keep the first acceptable unit entry.

    A candidate ``(i, j)`` is acceptable when column ``j`` is unused and no row
    ``x`` in the column (other than ``i``) already reaches ``i``. Once a row
    accepts a pair the scan moves to the next row.
    """
    R = RelationGraph(M.nrows)
    desc, anc, out = R._desc, R._anc, R._out
    pairs = []
    used_cols = 0
    colmasks = M.colmasks
    for i, row in enumerate(M.bitrows):
        cand = row & ~used_cols
        if not cand:
            continue
        bit_i = 1 << i
        anc_i = anc[i]
        while cand:
            low = cand & -cand
            cand ^= low
            targets = colmasks[low.bit_length() - 1] & ~bit_i
            if anc_i & targets:
                continue
            pairs.append((i, low.bit_length() - 1))
            used_cols |= low
            if targets:
                # same update as RelationGraph._extend; row i has no out-edges yet
                out[i] = targets
                new = targets
                t = targets
                while t:
                    lt = t & -t
                    t ^= lt
                    new |= desc[lt.bit_length() - 1]
                sources = anc_i | bit_i
                src = sources
                while src:
                    lp = src & -src
                    src ^= lp
                    desc[lp.bit_length() - 1] |= new
                while new:
                    ld = new & -new
                    new ^= ld
                    anc[ld.bit_length() - 1] |= sources
            break
    return DvfResult(VectorField._trusted(pairs), R)


def admissible_candidates(
    M: Gf2Matrix, used_rows: int, used_cols: int, R: RelationGraph
) -> Iterator[Pair]:
    """Lazily yield, row-major, every pair that keeps the field admissible."""
    colmasks = M.colmasks
    for i, row in enumerate(M.bitrows):
        if (used_rows >> i) & 1:
            continue
        anc = R._anc[i]
        not_i = ~(1 << i)
        for j in iter_bits(row & ~used_cols):
            if not anc & colmasks[j] & not_i:
                yield (i, j)


def _is_admissible_step(M, used_rows, used_cols, R, pair) -> bool:
    i, j = pair
    if not (0 <= i < M.nrows and 0 <= j < M.ncols):
        return False
    if (used_rows >> i) & 1 or (used_cols >> j) & 1 or not (M.bitrows[i] >> j) & 1:
        return False
    return not R._anc[i] & M.colmasks[j] & ~(1 << i)


def generate_with_strategy(M: Gf2Matrix, strategy: PickStrategy) -> DvfResult:
    """Greedy construction driven by ``strategy``, for at most ``min(m, n)`` steps.

    The strategy receives the current field and relation (its own copies) plus a
    lazy row-major iterable of admissible pairs, and returns one of them or
    ``None`` to stop. A pick outside the admissible set raises ``ValueError``.
    """
    R = RelationGraph(M.nrows)
    pairs: list[Pair] = []
    used_rows = used_cols = 0
    for _ in range(min(M.nrows, M.ncols)):
        candidates = admissible_candidates(M, used_rows, used_cols, R)
        pick = strategy(M, VectorField(pairs), R.copy(), candidates)
        if pick is None:
            break
        pick = (int(pick[0]), int(pick[1]))
        if not _is_admissible_step(M, used_rows, used_cols, R, pick):
            raise ValueError(f"strategy picked non-admissible pair {pick}")
        i, j = pick
        pairs.append(pick)
        used_rows |= 1 << i
        used_cols |= 1 << j
        R._extend(i, M.colmasks[j] & ~(1 << i))
    return DvfResult(VectorField(pairs), R)


def rs_strategy(M, V, R, candidates):
    """First admissible pair in row-major order.

    Rejected pairs never become admissible later (used sets and relations only
    grow), so this reproduces the row scan of ``rs_generate`` exactly.
    """
    return next(iter(candidates), None)


def none_strategy(M, V, R, candidates):
    return None


def random_strategy(seed: int) -> PickStrategy:
    """Strategy picking uniformly among admissible pairs, reproducible per ``seed``."""
    rng = random.Random(seed)

    def pick(M, V, R, candidates):
        pool = list(candidates)
        if not pool:
            return None
        return pool[rng.randrange(len(pool))]

    return pick
