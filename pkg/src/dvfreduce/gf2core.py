"""Matrices over GF(2).

A matrix keeps two views of the same entry set: bit-packed rows (bit ``j`` of
``bitrows[i]`` is the entry ``(i, j)``) and bit-packed columns (bit ``i`` of
``colmasks[j]``). Rows make XOR elimination cheap, columns make face lookups
cheap. Instances are never mutated after construction.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import BoundsError, FormatError

__all__ = [
    "Gf2Matrix",
    "iter_bits",
    "from_rows",
    "rank_dense",
    "rank_bitrows",
    "column_support",
    "parse_matrix",
    "format_matrix",
]


def iter_bits(x: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _transpose_bits(masks: Sequence[int], width: int) -> tuple[int, ...]:
    out = [0] * width
    for i, mask in enumerate(masks):
        bit = 1 << i
        for j in iter_bits(mask):
            out[j] |= bit
    return tuple(out)


class Gf2Matrix:
    __slots__ = ("nrows", "ncols", "bitrows", "colmasks")

    def __init__(self, nrows: int, ncols: int, entries: Iterable[tuple[int, int]] = ()):
        if nrows < 0 or ncols < 0:
            raise ValueError(f"negative shape {nrows}x{ncols}")
        rows = [0] * nrows
        for i, j in entries:
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise BoundsError(f"entry ({i}, {j}) outside {nrows}x{ncols} matrix")
            rows[i] |= 1 << j
        self._set(nrows, ncols, tuple(rows))

    def _set(self, nrows, ncols, bitrows, colmasks=None):
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "bitrows", bitrows)
        if colmasks is None:
            colmasks = _transpose_bits(bitrows, ncols)
        object.__setattr__(self, "colmasks", colmasks)

    def __setattr__(self, name, value):
        raise AttributeError("Gf2Matrix is immutable")

    @classmethod
    def from_bitrows(cls, nrows: int, ncols: int, bitrows: Iterable[int]) -> Gf2Matrix:
        """Build from packed rows; bits at or beyond ``ncols`` are rejected."""
        rows = tuple(bitrows)
        if len(rows) != nrows:
            raise ValueError(f"expected {nrows} rows, got {len(rows)}")
        limit = 1 << ncols
        for i, r in enumerate(rows):
            if r < 0 or r >= limit:
                raise BoundsError(f"row {i} has bits outside {ncols} columns")
        m = cls.__new__(cls)
        m._set(nrows, ncols, rows)
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> Gf2Matrix:
        return from_rows(rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> Gf2Matrix:
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, k: int) -> Gf2Matrix:
        return cls(k, k, ((i, i) for i in range(k)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def nnz(self) -> int:
        return sum(r.bit_count() for r in self.bitrows)

    def _check(self, i, j):
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise BoundsError(f"index ({i}, {j}) outside {self.nrows}x{self.ncols} matrix")

    def get(self, i: int, j: int) -> int:
        self._check(i, j)
        return (self.bitrows[i] >> j) & 1

    def set(self, i: int, j: int, bit: int) -> Gf2Matrix:
        """Return a copy with entry ``(i, j)`` set to ``bit``."""
        self._check(i, j)
        if bit not in (0, 1):
            raise ValueError(f"entry must be 0 or 1, got {bit!r}")
        rows = list(self.bitrows)
        if bit:
            rows[i] |= 1 << j
        else:
            rows[i] &= ~(1 << j)
        return Gf2Matrix.from_bitrows(self.nrows, self.ncols, rows)

    def column_support(self, j: int) -> frozenset[int]:
        if not 0 <= j < self.ncols:
            raise BoundsError(f"column {j} outside {self.ncols} columns")
        return frozenset(iter_bits(self.colmasks[j]))

    def row_support(self, i: int) -> list[int]:
        if not 0 <= i < self.nrows:
            raise BoundsError(f"row {i} outside {self.nrows} rows")
        return list(iter_bits(self.bitrows[i]))

    def entries(self) -> Iterator[tuple[int, int]]:
        """Nonzero positions in row-major order."""
        for i, r in enumerate(self.bitrows):
            for j in iter_bits(r):
                yield (i, j)

    def to_rows(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.bitrows]

    def transpose(self) -> Gf2Matrix:
        m = Gf2Matrix.__new__(Gf2Matrix)
        m._set(self.ncols, self.nrows, self.colmasks, self.bitrows)
        return m

    def __matmul__(self, other: Gf2Matrix) -> Gf2Matrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for r in self.bitrows:
            acc = 0
            for k in iter_bits(r):
                acc ^= other.bitrows[k]
            out.append(acc)
        return Gf2Matrix.from_bitrows(self.nrows, other.ncols, out)

    def is_zero(self) -> bool:
        return not any(self.bitrows)

    def __eq__(self, other):
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        return self.shape == other.shape and self.bitrows == other.bitrows

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.bitrows))

    def __repr__(self):
        return f"Gf2Matrix({self.nrows}x{self.ncols}, nnz={self.nnz})"


def from_rows(rows: Sequence[Sequence[int]]) -> Gf2Matrix:
    """Build a matrix from a list of 0/1 lists."""
    rows = list(rows)
    if not rows:
        return Gf2Matrix(0, 0)
    ncols = len(rows[0])
    packed = []
    for i, row in enumerate(rows):
        if len(row) != ncols:
            raise FormatError(f"row {i} has {len(row)} entries, expected {ncols}")
        acc = 0
        for j, bit in enumerate(row):
            if bit == 1:
                acc |= 1 << j
            elif bit != 0:
                raise FormatError(f"entry ({i}, {j}) is {bit!r}, expected 0 or 1")
        packed.append(acc)
    return Gf2Matrix.from_bitrows(len(rows), ncols, packed)


def column_support(M: Gf2Matrix, j: int) -> frozenset[int]:
    return M.column_support(j)


def rank_dense(M: Gf2Matrix) -> int:
    """GF(2) rank by column-by-column Gaussian elimination on packed rows."""
    return rank_bitrows(M.bitrows, M.ncols)


def rank_bitrows(bitrows: Sequence[int], ncols: int) -> int:
    work = list(bitrows)
    rank = 0
    nrows = len(work)
    for col in range(ncols):
        if rank == nrows:
            break
        bit = 1 << col
        pivot = None
        for r in range(rank, nrows):
            if work[r] & bit:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        for r in range(rank + 1, nrows):
            if work[r] & bit:
                work[r] ^= prow
        rank += 1
    return rank


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_matrix(text: str) -> Gf2Matrix:
    """Parse the ``m n`` header + rows text format. ``#`` lines are skipped."""
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("missing 'm n' header") from None
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError(f"bad header {header!r}, expected 'm n'", line=lineno)
    nrows, ncols = int(parts[0]), int(parts[1])
    packed = []
    for lineno, line in lines:
        if len(packed) == nrows:
            raise FormatError(f"more than {nrows} rows", line=lineno)
        tokens = line.split()
        if len(tokens) != ncols:
            raise FormatError(f"expected {ncols} entries, got {len(tokens)}", line=lineno)
        acc = 0
        for j, tok in enumerate(tokens):
            if tok == "1":
                acc |= 1 << j
            elif tok != "0":
                raise FormatError(f"entry {tok!r} is not 0 or 1", line=lineno)
        packed.append(acc)
    if ncols == 0:
        # zero-width rows are blank lines and were skipped
        packed = [0] * nrows
    if len(packed) != nrows:
        raise FormatError(f"expected {nrows} rows, got {len(packed)}")
    return Gf2Matrix.from_bitrows(nrows, ncols, packed)


def format_matrix(M: Gf2Matrix) -> str:
    lines = [f"{M.nrows} {M.ncols}"]
    for r in M.bitrows:
        lines.append(" ".join("1" if (r >> j) & 1 else "0" for j in range(M.ncols)))
    return "\n".join(lines) + "\n"
