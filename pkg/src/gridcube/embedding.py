"""Embedding an A x B grid into a k-ary n-cube with dilation 1.

Grid point ``(x, y)`` goes to the node whose dimension-0 digit is ``x`` and
whose remaining ``n - 1`` digits are the rank-``y`` tuple of the reflected
base-``k`` Gray code. Rows step along dimension 0 and columns walk the Gray
sequence, so every grid edge lands on a cube edge whose digits differ by
exactly 1, without using wraparound links.

When ``k`` is a power of 2 each node also carries an ``n*log2(k)``-bit label,
whose top ``ceil(log2 A)`` bits form the row field and whose bottom
``ceil(log2 B)`` bits form the column field.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .errors import ColOverflow, DomainError, RowOverflow, UnsupportedArityError
from .graycode import (
    BitString,
    LabelPartition,
    ceil_log2,
    is_power_of_two,
    kary_gray_rank_to_tuple,
    label_of_coordinate,
    partition_label,
)
from .topology import Coordinate, CubeSpec

GridPoint = tuple[int, int]


@dataclass(frozen=True)
class GridSpec:
    rows: int
    cols: int

    def __post_init__(self) -> None:
        for name in ("rows", "cols"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise DomainError(f"{name} must be a positive integer, got {value!r}")
        if self.rows * self.cols < 2:
            raise DomainError("a grid needs at least two points")

    @property
    def size(self) -> int:
        return self.rows * self.cols

    def points(self) -> list[GridPoint]:
        """All grid points, x-major."""
        return [(x, y) for x in range(self.rows) for y in range(self.cols)]

    def edges(self) -> list[tuple[GridPoint, GridPoint]]:
        """Mesh edges (no wraparound), each once."""
        out = []
        for x, y in self.points():
            if x + 1 < self.rows:
                out.append(((x, y), (x + 1, y)))
            if y + 1 < self.cols:
                out.append(((x, y), (x, y + 1)))
        return out

    def __str__(self) -> str:
        return f"{self.rows}x{self.cols} grid"


@dataclass(frozen=True)
class EmbeddingMap:
    """An assignment of grid points to cube nodes.

    Construction only freezes the data. Use :func:`gridcube.verify.verify` to
    check that it is complete, injective and edge-preserving, since maps may
    come from outside (JSON files, hand-built test cases).
    """

    grid: GridSpec
    cube: CubeSpec
    assign: Mapping[GridPoint, Coordinate] = field(repr=False)

    def __post_init__(self) -> None:
        frozen = {tuple(p): tuple(c) for p, c in self.assign.items()}
        object.__setattr__(self, "assign", MappingProxyType(frozen))

    def __getitem__(self, point: GridPoint) -> Coordinate:
        return self.assign[point]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmbeddingMap):
            return NotImplemented
        return (self.grid, self.cube, dict(self.assign)) == (other.grid, other.cube, dict(other.assign))

    def __hash__(self) -> int:
        return hash((self.grid, self.cube, frozenset(self.assign.items())))


@dataclass(frozen=True)
class LabelledPoint:
    x: int
    y: int
    coord: Coordinate
    label: BitString
    partition: LabelPartition


def check_fit(grid: GridSpec, cube: CubeSpec) -> None:
    """Raise RowOverflow or ColOverflow unless ``A <= k`` and ``B <= k**(n-1)``."""
    if grid.rows > cube.k:
        raise RowOverflow(grid.rows, cube.k)
    bound = cube.k ** (cube.n - 1)
    if grid.cols > bound:
        raise ColOverflow(grid.cols, bound)


def column_tuple(y: int, cube: CubeSpec) -> Coordinate:
    if cube.n == 1:
        if y:
            raise DomainError(f"a {cube} has a single column, got y={y}")
        return ()
    return kary_gray_rank_to_tuple(y, cube.k, cube.n - 1)


def embed_grid(grid: GridSpec, cube: CubeSpec) -> EmbeddingMap:
    check_fit(grid, cube)
    columns = [column_tuple(y, cube) for y in range(grid.cols)]
    assign = {(x, y): (x,) + columns[y] for x in range(grid.rows) for y in range(grid.cols)}
    return EmbeddingMap(grid, cube, assign)


def inflate_k(grid: GridSpec, k: int, n: int) -> CubeSpec:
    """Round ``k`` up to the next power of 2, keeping ``n``.

    ``grid`` is accepted for symmetry with :func:`embed_grid`; the result does
    not depend on it. A grid that fits the ``k``-ary cube also fits the
    inflated one.
    """
    if k < 2 or n < 1:
        raise DomainError(f"need k >= 2 and n >= 1, got k={k}, n={n}")
    return CubeSpec(1 << ceil_log2(k), n)


def labelled_view(emap: EmbeddingMap) -> list[LabelledPoint]:
    if not is_power_of_two(emap.cube.k):
        raise UnsupportedArityError(emap.cube.k)
    rows = []
    for x, y in sorted(emap.assign):
        coord = emap.assign[(x, y)]
        label = label_of_coordinate(coord, emap.cube.k)
        rows.append(LabelledPoint(x, y, coord, label, partition_label(label, emap.grid, emap.cube)))
    return rows
