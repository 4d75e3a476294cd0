"""Binary images, their cubical complexes, and Betti numbers.

Each foreground pixel ``(x, y)`` is the unit square ``[x, x+1] x [y, y+1]``
together with its faces. Pixels sharing only a corner are therefore connected
(8-connectivity). ``y`` grows downwards, matching PBM row order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .errors import FormatError, ParameterError
from .gf2core import Gf2Matrix, rank_dense
from .reduce import rank_via_dvf

__all__ = [
    "BinaryImage",
    "CubicalComplex",
    "FiniteChainComplex",
    "load_pbm",
    "format_pbm",
    "build_complex",
    "betti",
    "count_components",
    "synth_image",
]

HORIZONTAL, VERTICAL = 0, 1


@dataclass(frozen=True)
class BinaryImage:
    width: int
    height: int
    pixels: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.width < 0 or self.height < 0:
            raise ParameterError(f"negative image size {self.width}x{self.height}")
        object.__setattr__(self, "pixels", frozenset(self.pixels))
        for x, y in self.pixels:
            if not (0 <= x < self.width and 0 <= y < self.height):
                raise ParameterError(f"pixel ({x}, {y}) outside {self.width}x{self.height} image")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> BinaryImage:
        """``rows[y][x]`` truthy marks a foreground pixel."""
        height = len(rows)
        width = len(rows[0]) if rows else 0
        pixels = {(x, y) for y, row in enumerate(rows) for x, v in enumerate(row) if v}
        return cls(width, height, frozenset(pixels))

    def to_rows(self) -> list[list[int]]:
        out = [[0] * self.width for _ in range(self.height)]
        for x, y in self.pixels:
            out[y][x] = 1
        return out


@dataclass(frozen=True)
class FiniteChainComplex:
    """Cell counts per degree and boundary matrices ``boundaries[k]: C_k -> C_{k-1}``.

    ``boundaries[0]`` is the zero map out of degree 0 and is stored as a
    ``0 x dims[0]`` matrix.
    """

    dims: tuple[int, ...]
    boundaries: tuple[Gf2Matrix, ...]

    def __post_init__(self):
        if len(self.dims) != len(self.boundaries):
            raise ValueError("need one boundary matrix per degree")
        for k, d in enumerate(self.boundaries):
            expected_rows = self.dims[k - 1] if k else 0
            if d.shape != (expected_rows, self.dims[k]):
                raise ValueError(f"boundary {k} has shape {d.shape}, expected {(expected_rows, self.dims[k])}")

    def is_chain_complex(self) -> bool:
        return all(
            (self.boundaries[k] @ self.boundaries[k + 1]).is_zero()
            for k in range(1, len(self.boundaries) - 1)
        )

    def betti_numbers(self, use_dvf: bool = True) -> list[int]:
        rank = rank_via_dvf if use_dvf else rank_dense
        ranks = [rank(d) for d in self.boundaries] + [0]
        return [self.dims[k] - ranks[k] - ranks[k + 1] for k in range(len(self.dims))]


@dataclass(frozen=True)
class CubicalComplex:
    cells0: tuple[tuple[int, int], ...]
    cells1: tuple[tuple[int, int, int], ...]
    cells2: tuple[tuple[int, int], ...]
    d1: Gf2Matrix = field(repr=False)
    d2: Gf2Matrix = field(repr=False)

    def chain_complex(self) -> FiniteChainComplex:
        n0, n1, n2 = len(self.cells0), len(self.cells1), len(self.cells2)
        return FiniteChainComplex((n0, n1, n2), (Gf2Matrix(0, n0), self.d1, self.d2))


def _square_edges(x, y):
    return ((x, y, HORIZONTAL), (x, y, VERTICAL), (x, y + 1, HORIZONTAL), (x + 1, y, VERTICAL))


def _edge_vertices(x, y, axis):
    return ((x, y), (x + 1, y)) if axis == HORIZONTAL else ((x, y), (x, y + 1))


def build_complex(img: BinaryImage) -> CubicalComplex:
    squares = sorted(img.pixels)
    edges = sorted({e for x, y in squares for e in _square_edges(x, y)})
    vertices = sorted({v for e in edges for v in _edge_vertices(*e)})
    vertex_index = {v: i for i, v in enumerate(vertices)}
    edge_index = {e: i for i, e in enumerate(edges)}
    d1 = Gf2Matrix(
        len(vertices),
        len(edges),
        ((vertex_index[v], j) for j, e in enumerate(edges) for v in _edge_vertices(*e)),
    )
    d2 = Gf2Matrix(
        len(edges),
        len(squares),
        ((edge_index[e], k) for k, s in enumerate(squares) for e in _square_edges(*s)),
    )
    return CubicalComplex(tuple(vertices), tuple(edges), tuple(squares), d1, d2)


def betti(cx: CubicalComplex, use_dvf: bool = True) -> tuple[int, int]:
    rank = rank_via_dvf if use_dvf else rank_dense
    r1 = rank(cx.d1)
    r2 = rank(cx.d2)
    return len(cx.cells0) - r1, len(cx.cells1) - r1 - r2


def count_components(img: BinaryImage) -> int:
    return betti(build_complex(img))[0]


def synth_image(width: int, height: int, density: float, seed: int) -> BinaryImage:
    """Each pixel is foreground independently with probability ``density``."""
    if not 0.0 <= density <= 1.0:
        raise ParameterError(f"density {density} outside [0, 1]")
    if width < 0 or height < 0:
        raise ParameterError(f"negative image size {width}x{height}")
    rng = random.Random(seed)
    pixels = frozenset(
        (x, y) for y in range(height) for x in range(width) if rng.random() < density
    )
    return BinaryImage(width, height, pixels)


_WS = b" \t\r\n\v\f"


def load_pbm(data: bytes) -> BinaryImage:
    """Parse a plain (``P1``) PBM. Raster bits may or may not be space-separated."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    pos = 0
    size = len(data)

    def skip_ws():
        nonlocal pos
        while pos < size:
            c = data[pos]
            if c in _WS:
                pos += 1
            elif c == ord("#"):
                while pos < size and data[pos] not in b"\r\n":
                    pos += 1
            else:
                break

    def header_token():
        nonlocal pos
        skip_ws()
        start = pos
        while pos < size and data[pos] not in _WS and data[pos] != ord("#"):
            pos += 1
        return data[start:pos], start

    if not data.startswith(b"P1"):
        raise FormatError("bad magic, expected 'P1'", offset=0)
    pos = 2
    dims = []
    for name in ("width", "height"):
        tok, at = header_token()
        if not tok.isdigit():
            raise FormatError(f"bad {name} {tok!r}", offset=at)
        dims.append(int(tok))
    width, height = dims
    pixels = set()
    for k in range(width * height):
        skip_ws()
        if pos >= size:
            raise FormatError(f"raster has {k} pixels, expected {width * height}", offset=pos)
        c = data[pos]
        if c == ord("1"):
            pixels.add((k % width, k // width))
        elif c != ord("0"):
            raise FormatError(f"non-bit raster token {chr(c)!r}", offset=pos)
        pos += 1
    skip_ws()
    if pos < size:
        raise FormatError("trailing data after raster", offset=pos)
    return BinaryImage(width, height, frozenset(pixels))


def format_pbm(img: BinaryImage) -> str:
    lines = ["P1", f"{img.width} {img.height}"]
    lines += [" ".join(str(v) for v in row) for row in img.to_rows()]
    return "\n".join(lines) + "\n"
