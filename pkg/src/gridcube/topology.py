"""The k-ary n-cube host graph.

Nodes are digit tuples ``(d0, ..., d_{n-1})`` with each digit in ``[0, k)``.
Two nodes are adjacent when they differ in one dimension by 1 modulo ``k``, so
wraparound (torus) edges are included. For ``k == 2`` the +1 and -1 neighbours
coincide and the graph is the ordinary binary hypercube.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError

Coordinate = tuple[int, ...]

MAX_NODES = 1 << 24


@dataclass(frozen=True)
class CubeSpec:
    k: int
    n: int

    def __post_init__(self) -> None:
        for name in ("k", "n"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise DomainError(f"{name} must be an integer, got {value!r}")
        if self.k < 2:
            raise DomainError(f"arity k must be >= 2, got {self.k}")
        if self.n < 1:
            raise DomainError(f"dimension n must be >= 1, got {self.n}")
        if self.k**self.n > MAX_NODES:
            raise DomainError(f"{self.k}-ary {self.n}-cube has {self.k**self.n} nodes, above the {MAX_NODES} limit")

    @property
    def node_count(self) -> int:
        return self.k**self.n

    def is_valid(self, coord: object) -> bool:
        return (
            isinstance(coord, tuple)
            and len(coord) == self.n
            and all(isinstance(d, int) and not isinstance(d, bool) and 0 <= d < self.k for d in coord)
        )

    def check(self, coord: Coordinate) -> Coordinate:
        if not self.is_valid(coord):
            raise DomainError(f"{coord!r} is not a node of the {self.k}-ary {self.n}-cube")
        return coord

    def index(self, coord: Coordinate) -> int:
        """Position of ``coord`` in lexicographic order (dimension 0 most significant)."""
        value = 0
        for d in self.check(coord):
            value = value * self.k + d
        return value

    def __str__(self) -> str:
        return f"{self.k}-ary {self.n}-cube"


@dataclass(frozen=True)
class CubeStats:
    node_count: int
    edge_count: int
    degree: int
    diameter: int


def nodes(spec: CubeSpec) -> Iterator[Coordinate]:
    return itertools.product(range(spec.k), repeat=spec.n)


def neighbors(spec: CubeSpec, c: Coordinate) -> set[Coordinate]:
    spec.check(c)
    out = set()
    for dim, digit in enumerate(c):
        for step in (1, -1):
            out.add(c[:dim] + ((digit + step) % spec.k,) + c[dim + 1 :])
    return out


def are_adjacent(spec: CubeSpec, a: Coordinate, b: Coordinate) -> bool:
    return torus_distance(spec, a, b) == 1


def torus_distance(spec: CubeSpec, a: Coordinate, b: Coordinate) -> int:
    spec.check(a)
    spec.check(b)
    total = 0
    for x, y in zip(a, b):
        diff = abs(x - y)
        total += min(diff, spec.k - diff)
    return total


def edges(spec: CubeSpec) -> Iterator[tuple[Coordinate, Coordinate]]:
    """Each undirected edge once, as ``(u, v)`` with ``u`` lexicographically first."""
    for u in nodes(spec):
        for v in sorted(neighbors(spec, u)):
            if u < v:
                yield u, v


def cube_stats(spec: CubeSpec) -> CubeStats:
    k, n = spec.k, spec.n
    degree = n if k == 2 else 2 * n
    return CubeStats(
        node_count=k**n,
        edge_count=degree * k**n // 2,
        degree=degree,
        diameter=n * (k // 2),
    )
