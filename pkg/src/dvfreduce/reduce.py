"""Elimination of vector-field pivots and DVF-accelerated rank."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from .dvf import VectorField, is_discrete_vector_field
from .errors import FormatError, PivotError
from .gf2core import Gf2Matrix, format_matrix, parse_matrix, rank_bitrows, rank_dense
from .rsalg import rs_generate

__all__ = [
    "ReducedMatrix",
    "ReductionReport",
    "eliminate_pivots",
    "rank_via_dvf",
    "rank_with_field",
    "reduction_report",
    "format_reduced",
    "parse_reduced",
]


@dataclass(frozen=True)
class ReducedMatrix:
    critical: Gf2Matrix
    row_map: tuple[int, ...]
    col_map: tuple[int, ...]
    eliminated: int


def _check_field(M: Gf2Matrix, V: VectorField) -> None:
    if is_discrete_vector_field(M, V):
        return
    seen_rows, seen_cols = set(), set()
    for a, b in V:
        if not (0 <= a < M.nrows and 0 <= b < M.ncols):
            raise PivotError("pair outside the matrix", (a, b))
        if a in seen_rows or b in seen_cols:
            raise PivotError("row or column already paired", (a, b))
        if not (M.bitrows[a] >> b) & 1:
            raise PivotError("pivot entry is 0", (a, b))
        seen_rows.add(a)
        seen_cols.add(b)


def _eliminate(bitrows, colmasks, pairs):
    """Core elimination on packed rows and columns; returns the updated rows.

    Adding pivot row ``a`` to every other row ``r`` of column ``b`` flips, in
    each column ``c`` of row ``a``, exactly the rows of that column set ``S``,
    so both views update with one XOR per touched row and per touched column.
    """
    rows = list(bitrows)
    cols = list(colmasks)
    for a, b in pairs:
        prow = rows[a]
        if not (prow >> b) & 1:
            raise PivotError("pivot entry vanished during elimination", (a, b))
        keep = ~(1 << a)
        S = cols[b] & keep
        s = S
        while s:
            low = s & -s
            s ^= low
            rows[low.bit_length() - 1] ^= prow
        p = prow
        while p:
            low = p & -p
            p ^= low
            c = low.bit_length() - 1
            cols[c] = (cols[c] ^ S) & keep
    return rows


def _critical_rows(rows, row_map, col_map):
    new_index = {j: k for k, j in enumerate(col_map)}
    packed = []
    for i in row_map:
        acc = 0
        r = rows[i]
        while r:
            low = r & -r
            r ^= low
            acc |= 1 << new_index[low.bit_length() - 1]
        packed.append(acc)
    return packed


def eliminate_pivots(M: Gf2Matrix, V: VectorField) -> ReducedMatrix:
    """Clear each pivot column by row XOR, in ``V`` order, and drop pivot rows/cols.

    For an admissible ``V`` every pivot survives the earlier eliminations, and
    the surviving submatrix does not depend on the processing order. A field
    that is merely a vector field can lose a pivot to an earlier XOR; that
    raises ``PivotError``.
    """
    _check_field(M, V)
    rows = _eliminate(M.bitrows, M.colmasks, V.pairs)
    dead_rows = set(V.rows())
    dead_cols = set(V.cols())
    row_map = tuple(i for i in range(M.nrows) if i not in dead_rows)
    col_map = tuple(j for j in range(M.ncols) if j not in dead_cols)
    packed = _critical_rows(rows, row_map, col_map)
    critical = Gf2Matrix.from_bitrows(len(row_map), len(col_map), packed)
    return ReducedMatrix(critical, row_map, col_map, len(V))


def _rank_with_pairs(M: Gf2Matrix, pairs) -> int:
    rows = _eliminate(M.bitrows, M.colmasks, pairs)
    dead_rows = {a for a, _ in pairs}
    dead_cols = {b for _, b in pairs}
    row_map = [i for i in range(M.nrows) if i not in dead_rows]
    col_map = [j for j in range(M.ncols) if j not in dead_cols]
    return len(pairs) + rank_bitrows(_critical_rows(rows, row_map, col_map), len(col_map))


def rank_with_field(M: Gf2Matrix, V: VectorField) -> int:
    """Elimination plus residual rank for a field built beforehand."""
    _check_field(M, V)
    return _rank_with_pairs(M, V.pairs)


def rank_via_dvf(M: Gf2Matrix) -> int:
    """Rank as ``|V|`` plus the dense rank of the critical matrix, ``V`` from the row scan."""
    return _rank_with_pairs(M, rs_generate(M).field.pairs)


@dataclass(frozen=True)
class ReductionReport:
    rows: int
    cols: int
    field_size: int
    critical_rows: int
    critical_cols: int
    rank_dvf: int
    rank_dense: int
    dvf_seconds: float
    dense_seconds: float
    reduce_seconds: float = 0.0

    @property
    def equal(self) -> bool:
        return self.rank_dvf == self.rank_dense

    @property
    def speedup(self) -> float:
        return self.dense_seconds / self.dvf_seconds if self.dvf_seconds > 0 else float("inf")

    @property
    def reduce_speedup(self) -> float:
        """Dense time over elimination plus residual rank, field already built."""
        return self.dense_seconds / self.reduce_seconds if self.reduce_seconds > 0 else float("inf")


def _median_time(fn, arg, repeats, *more):
    times = []
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(arg, *more)
        times.append(time.perf_counter() - t0)
    return result, statistics.median(times)


def reduction_report(M: Gf2Matrix, repeats: int = 3) -> ReductionReport:
    """Sizes before and after reduction plus median timings of both rank paths.

    ``dvf_seconds`` covers the whole path: field construction, elimination and
    the residual dense rank. ``reduce_seconds`` leaves out field construction.
    """
    rank_dvf, dvf_s = _median_time(rank_via_dvf, M, repeats)
    rank_d, dense_s = _median_time(rank_dense, M, repeats)
    V = rs_generate(M).field
    _, reduce_s = _median_time(rank_with_field, M, repeats, V)
    reduced = eliminate_pivots(M, V)
    return ReductionReport(
        rows=M.nrows,
        cols=M.ncols,
        field_size=len(V),
        critical_rows=reduced.critical.nrows,
        critical_cols=reduced.critical.ncols,
        rank_dvf=rank_dvf,
        rank_dense=rank_d,
        dvf_seconds=dvf_s,
        dense_seconds=dense_s,
        reduce_seconds=reduce_s,
    )


def format_reduced(reduced: ReducedMatrix) -> str:
    head = (
        f"# row_map: {' '.join(map(str, reduced.row_map))}\n"
        f"# col_map: {' '.join(map(str, reduced.col_map))}\n"
    )
    return head + format_matrix(reduced.critical)


def parse_reduced(text: str) -> ReducedMatrix:
    """Inverse of ``format_reduced``; ``eliminated`` is not recorded and set to 0 here."""
    maps = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        for key in ("row_map", "col_map"):
            prefix = f"# {key}:"
            if line.startswith(prefix):
                body = line[len(prefix):].split()
                if not all(t.isdigit() for t in body):
                    raise FormatError(f"bad {key}", line=lineno)
                maps[key] = tuple(int(t) for t in body)
    critical = parse_matrix(text)
    row_map = maps.get("row_map", tuple(range(critical.nrows)))
    col_map = maps.get("col_map", tuple(range(critical.ncols)))
    if len(row_map) != critical.nrows or len(col_map) != critical.ncols:
        raise FormatError("index maps do not match matrix shape")
    return ReducedMatrix(critical, row_map, col_map, 0)
