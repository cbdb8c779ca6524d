"""Checking embeddings, and a brute-force search for small instances.

:func:`verify` accepts any :class:`EmbeddingMap`, not only the ones built by
:func:`gridcube.embedding.embed_grid`, and measures it with nothing but cube
distances. It shares no code path with the constructor.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .embedding import EmbeddingMap, GridPoint, GridSpec
from .errors import ValidationError
from .topology import Coordinate, CubeSpec, neighbors, nodes, torus_distance

CubeEdge = tuple[Coordinate, Coordinate]


@dataclass(frozen=True)
class EmbeddingReport:
    injective: bool
    dilation: int
    load: int
    congestion: int
    expansion: Fraction
    isomorphic: bool

    def to_json(self) -> dict:
        return {
            "injective": self.injective,
            "dilation": self.dilation,
            "load": self.load,
            "congestion": self.congestion,
            "expansion": [self.expansion.numerator, self.expansion.denominator],
            "isomorphic": self.isomorphic,
        }


def _validate(emap: EmbeddingMap) -> None:
    offenders = []
    expected = set(emap.grid.points())
    for point in sorted(expected - set(emap.assign)):
        offenders.append(f"missing grid point {point}")
    for point in sorted(set(emap.assign) - expected, key=repr):
        offenders.append(f"grid point {point} outside the {emap.grid}")
    for point, coord in sorted(emap.assign.items(), key=repr):
        if not emap.cube.is_valid(coord):
            offenders.append(f"grid point {point} -> invalid coordinate {coord} for the {emap.cube}")
    if offenders:
        raise ValidationError(offenders)


def route(spec: CubeSpec, a: Coordinate, b: Coordinate) -> list[CubeEdge]:
    """Cube edges on the deterministic shortest path from ``a`` to ``b``.

    Dimensions are corrected in ascending order. Within a dimension the shorter
    way round is taken; on a tie, the way that does not wrap.
    """
    k = spec.k
    path = []
    here = list(a)
    for dim in range(spec.n):
        forward = (b[dim] - here[dim]) % k
        if forward == 0:
            continue
        backward = k - forward
        if forward < backward or (forward == backward and b[dim] > here[dim]):
            step, count = 1, forward
        else:
            step, count = -1, backward
        for _ in range(count):
            prev = tuple(here)
            here[dim] = (here[dim] + step) % k
            path.append(_edge(prev, tuple(here)))
    return path


def _edge(u: Coordinate, v: Coordinate) -> CubeEdge:
    return (u, v) if u <= v else (v, u)


def verify(emap: EmbeddingMap) -> EmbeddingReport:
    _validate(emap)
    grid, cube, assign = emap.grid, emap.cube, emap.assign

    per_node = Counter(assign.values())
    load = max(per_node.values())
    injective = load == 1

    dilation = 0
    per_edge: Counter[CubeEdge] = Counter()
    for u, v in grid.edges():
        a, b = assign[u], assign[v]
        dilation = max(dilation, torus_distance(cube, a, b))
        # a set: a route never reuses a cube edge, and k = 2 has no parallel links
        per_edge.update(set(route(cube, a, b)))
    congestion = max(per_edge.values(), default=0)

    return EmbeddingReport(
        injective=injective,
        dilation=dilation,
        load=load,
        congestion=congestion,
        expansion=Fraction(cube.node_count, grid.size),
        isomorphic=injective and dilation == 1,
    )


def is_isomorphic_embedding(emap: EmbeddingMap) -> bool:
    return verify(emap).isomorphic


class SearchStatus(enum.Enum):
    FOUND = "found"
    NONE = "none"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class SearchResult:
    status: SearchStatus
    embedding: Optional[EmbeddingMap] = None
    steps: int = 0


def oracle_search(grid: GridSpec, cube: CubeSpec, node_budget: int = 1_000_000) -> SearchResult:
    """Depth-first search for a dilation-1 injective map.

    Grid points are placed x-major; candidates are tried in lexicographic node
    order. ``steps`` counts placements. ``NONE`` means the search space was
    exhausted, so no isomorphic embedding exists. Fitting is not required.
    """
    if node_budget < 1:
        raise ValueError(f"node_budget must be positive, got {node_budget}")

    points = grid.points()
    if grid.size > cube.node_count:
        return SearchResult(SearchStatus.NONE)

    all_nodes = list(nodes(cube))
    adjacency = {c: sorted(neighbors(cube, c)) for c in all_nodes}
    placed: dict[GridPoint, Coordinate] = {}
    used: set[Coordinate] = set()
    steps = 0

    def candidates(point: GridPoint) -> list[Coordinate]:
        x, y = point
        anchors = [placed[p] for p in ((x - 1, y), (x, y - 1)) if p in placed]
        if not anchors:
            return all_nodes
        pool = set(adjacency[anchors[0]])
        for other in anchors[1:]:
            pool &= set(adjacency[other])
        return sorted(pool)

    # one candidate iterator per placed-or-pending grid point
    stack = [iter(candidates(points[0]))]
    while stack:
        depth = len(stack) - 1
        point = points[depth]
        if point in placed:
            used.discard(placed.pop(point))
        node = next((c for c in stack[-1] if c not in used), None)
        if node is None:
            stack.pop()
            continue
        if steps >= node_budget:
            return SearchResult(SearchStatus.BUDGET_EXHAUSTED, steps=steps)
        steps += 1
        placed[point] = node
        used.add(node)
        if depth + 1 == len(points):
            return SearchResult(SearchStatus.FOUND, EmbeddingMap(grid, cube, dict(placed)), steps)
        stack.append(iter(candidates(points[depth + 1])))
    return SearchResult(SearchStatus.NONE, steps=steps)
