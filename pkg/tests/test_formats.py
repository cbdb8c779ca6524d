from __future__ import annotations

import json

import pydot
import pytest

from gridcube.embedding import EmbeddingMap, GridSpec, embed_grid
from gridcube.errors import ValidationError
from gridcube.formats import dumps_map, loads_map, map_to_document, to_dot, to_table
from gridcube.topology import CubeSpec, cube_stats


def test_document_shape():
    doc = map_to_document(embed_grid(GridSpec(3, 9), CubeSpec(4, 3)))
    assert list(doc) == ["k", "n", "rows", "cols", "assignments"]
    assert (doc["k"], doc["n"], doc["rows"], doc["cols"]) == (4, 3, 3, 9)
    assert len(doc["assignments"]) == 27
    assert doc["assignments"][0] == {"x": 0, "y": 0, "coord": [0, 0, 0], "label": "000000"}
    assert doc["assignments"][-1] == {"x": 2, "y": 8, "coord": [2, 2, 0], "label": "111100"}
    assert [(a["x"], a["y"]) for a in doc["assignments"]] == [(x, y) for x in range(3) for y in range(9)]


def test_label_is_null_for_odd_arity():
    doc = map_to_document(embed_grid(GridSpec(2, 3), CubeSpec(3, 2)))
    assert {a["label"] for a in doc["assignments"]} == {None}
    assert '"label": null' in dumps_map(embed_grid(GridSpec(2, 3), CubeSpec(3, 2)))


@pytest.mark.parametrize("grid, cube", [(GridSpec(3, 9), CubeSpec(4, 3)), (GridSpec(5, 7), CubeSpec(5, 3))])
def test_round_trip(grid, cube):
    emap = embed_grid(grid, cube)
    assert loads_map(dumps_map(emap)) == emap


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("[]", "JSON object"),
        ("{", "invalid JSON"),
        ('{"k": 4, "n": 1, "rows": 2, "cols": 1, "assignments": {}}', "array"),
        ('{"k": 4, "n": 1, "rows": 2, "cols": "1", "assignments": []}', "'cols'"),
        ('{"k": 4, "n": 1, "rows": 2, "cols": 1, "assignments": [{"x": 0, "y": 0, "coord": "0"}]}', "coord"),
        (
            '{"k": 4, "n": 1, "rows": 2, "cols": 1, "assignments": '
            '[{"x": 0, "y": 0, "coord": [0]}, {"x": 0, "y": 0, "coord": [1]}]}',
            "assigned twice",
        ),
    ],
)
def test_malformed_documents(text, fragment):
    with pytest.raises(ValidationError, match=fragment):
        loads_map(text)


def test_labels_are_ignored_on_input():
    doc = map_to_document(embed_grid(GridSpec(2, 2), CubeSpec(2, 2)))
    for a in doc["assignments"]:
        a["label"] = "garbage"
    assert loads_map(json.dumps(doc)) == embed_grid(GridSpec(2, 2), CubeSpec(2, 2))


@pytest.mark.parametrize("k, n", [(4, 3), (3, 2), (2, 3)])
def test_dot_parses_and_has_every_node(k, n):
    cube = CubeSpec(k, n)
    grid = GridSpec(min(k, 3), min(k ** (n - 1), 3))
    text = to_dot(cube, embed_grid(grid, cube))
    (graph,) = pydot.graph_from_dot_data(text)
    named = [v for v in graph.get_nodes() if v.get_name() not in ("node", "edge", "graph")]
    assert len(named) == cube.node_count
    assert len(graph.get_edges()) == cube_stats(cube).edge_count
    filled = [v for v in named if v.get("style") == "filled"]
    assert len(filled) == grid.size
    assert sum(1 for e in graph.get_edges() if e.get("penwidth")) == len(grid.edges())


def test_host_dot_without_map():
    (graph,) = pydot.graph_from_dot_data(to_dot(CubeSpec(2, 2)))
    assert len(graph.get_edges()) == 4


def test_table():
    text = to_table(embed_grid(GridSpec(3, 9), CubeSpec(4, 3)))
    lines = text.splitlines()
    assert lines[0].split() == ["x", "y", "coord", "label", "row", "pad", "col"]
    assert len(lines) == 28
    assert lines[-1].split() == ["2", "8", "(2,2,0)", "111100", "11", "-", "1100"]


def test_table_line_grid():
    emap = EmbeddingMap(GridSpec(1, 2), CubeSpec(2, 1), {(0, 0): (0,), (0, 1): (1,)})
    assert to_table(emap).splitlines()[1].split() == ["0", "0", "(0)", "0", "-", "-", "0"]
