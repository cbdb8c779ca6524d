"""Independent oracles shared by the test modules.

Nothing here imports gridcube's Gray code or distance code: the host graph
comes from networkx and the Gray sequences from the textbook reflect-and-prefix
recursion.
"""

from __future__ import annotations

import functools

import networkx as nx


@functools.lru_cache(maxsize=None)
def host_graph(k: int, n: int) -> nx.Graph:
    g = nx.grid_graph(dim=[k] * n, periodic=True)
    if n == 1:
        g = nx.relabel_nodes(g, {v: (v,) for v in g.nodes})
    return g


@functools.lru_cache(maxsize=None)
def bfs_distances(k: int, n: int) -> dict:
    return dict(nx.all_pairs_shortest_path_length(host_graph(k, n)))


def reflected_binary(width: int) -> list[str]:
    """Binary reflected Gray code by mirroring: G(w) = 0G(w-1), 1reverse(G(w-1))."""
    seq = [""]
    for _ in range(width):
        seq = ["0" + s for s in seq] + ["1" + s for s in reversed(seq)]
    return seq


def reflected_kary(k: int, d: int) -> list[tuple[int, ...]]:
    """Reflected base-k sequence: leading digit v, followed by the tail sequence
    forwards for even v and backwards for odd v."""
    seq: list[tuple[int, ...]] = [()]
    for _ in range(d):
        out = []
        for v in range(k):
            tail = seq if v % 2 == 0 else list(reversed(seq))
            out.extend((v,) + t for t in tail)
        seq = out
    return seq


def grid_graph(rows: int, cols: int) -> nx.Graph:
    g = nx.grid_2d_graph(rows, cols)
    return g


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
