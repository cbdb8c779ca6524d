"""Serialization: the JSON embedding-map document, DOT, and a text table."""

from __future__ import annotations

import json
from typing import Any

from .embedding import EmbeddingMap, GridSpec, labelled_view
from .errors import ValidationError
from .graycode import is_power_of_two, label_of_coordinate
from .topology import CubeSpec, edges, nodes


def map_to_document(emap: EmbeddingMap) -> dict[str, Any]:
    k = emap.cube.k
    labelled = is_power_of_two(k)
    assignments = []
    for x, y in sorted(emap.assign):
        coord = emap.assign[(x, y)]
        label = str(label_of_coordinate(coord, k)) if labelled else None
        assignments.append({"x": x, "y": y, "coord": list(coord), "label": label})
    return {
        "k": k,
        "n": emap.cube.n,
        "rows": emap.grid.rows,
        "cols": emap.grid.cols,
        "assignments": assignments,
    }


def dumps_map(emap: EmbeddingMap) -> str:
    return json.dumps(map_to_document(emap), indent=2) + "\n"


def _int(doc: dict, key: str, where: str) -> int:
    value = doc.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError([f"{where}: field {key!r} must be an integer, got {value!r}"])
    return value


def map_from_document(doc: Any) -> EmbeddingMap:
    """Parse a map document. ``label`` fields are ignored: they are derived data."""
    if not isinstance(doc, dict):
        raise ValidationError(["document must be a JSON object"])
    cube = CubeSpec(_int(doc, "k", "document"), _int(doc, "n", "document"))
    grid = GridSpec(_int(doc, "rows", "document"), _int(doc, "cols", "document"))
    entries = doc.get("assignments")
    if not isinstance(entries, list):
        raise ValidationError(["field 'assignments' must be an array"])

    assign = {}
    offenders = []
    for i, entry in enumerate(entries):
        where = f"assignments[{i}]"
        if not isinstance(entry, dict):
            offenders.append(f"{where} is not an object")
            continue
        try:
            point = (_int(entry, "x", where), _int(entry, "y", where))
        except ValidationError as exc:
            offenders.extend(exc.offenders)
            continue
        coord = entry.get("coord")
        if not isinstance(coord, list) or not all(isinstance(d, int) and not isinstance(d, bool) for d in coord):
            offenders.append(f"{where}: 'coord' must be an array of integers")
            continue
        if point in assign:
            offenders.append(f"{where}: grid point {point} assigned twice")
            continue
        assign[point] = tuple(coord)
    if offenders:
        raise ValidationError(offenders)
    return EmbeddingMap(grid, cube, assign)


def loads_map(text: str) -> EmbeddingMap:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError([f"invalid JSON: {exc}"]) from exc
    return map_from_document(doc)


def _node_name(coord: tuple[int, ...]) -> str:
    return '"(' + ",".join(map(str, coord)) + ')"'


def to_dot(cube: CubeSpec, emap: EmbeddingMap | None = None) -> str:
    """Graphviz rendering of the host cube, with used nodes filled."""
    used = {c: p for p, c in emap.assign.items()} if emap is not None else {}
    labelled = is_power_of_two(cube.k)
    lines = [f"graph cube_{cube.k}_{cube.n} {{", "  node [shape=circle];"]
    for coord in nodes(cube):
        attrs = []
        text = ",".join(map(str, coord))
        if labelled:
            text += "\\n" + str(label_of_coordinate(coord, cube.k))
        if coord in used:
            x, y = used[coord]
            text += f"\\n[{x},{y}]"
            attrs.append('style=filled, fillcolor="gray30", fontcolor="white"')
        attrs.insert(0, f'label="{text}"')
        lines.append(f"  {_node_name(coord)} [{', '.join(attrs)}];")
    grid_links = set()
    if emap is not None:
        for u, v in emap.grid.edges():
            a, b = emap.assign[u], emap.assign[v]
            grid_links.add((min(a, b), max(a, b)))
    for u, v in edges(cube):
        style = " [penwidth=3]" if (u, v) in grid_links else ""
        lines.append(f"  {_node_name(u)} -- {_node_name(v)}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_table(emap: EmbeddingMap) -> str:
    header = ["x", "y", "coord", "label", "row", "pad", "col"]
    rows = []
    for p in labelled_view(emap):
        rows.append([
            str(p.x),
            str(p.y),
            "(" + ",".join(map(str, p.coord)) + ")",
            str(p.label),
            str(p.partition.row_bits) or "-",
            str(p.partition.pad_bits) or "-",
            str(p.partition.col_bits) or "-",
        ])
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    out = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in [header] + rows]
    return "\n".join(out) + "\n"
