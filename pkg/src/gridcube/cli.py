"""Command-line interface: ``gridcube {embed,verify,oracle,info}``.

Exit status is 0 on success (and, for ``verify``, only for an isomorphic map),
1 for a domain failure such as a grid that does not fit, and 2 for bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from .embedding import GridSpec, check_fit, embed_grid, inflate_k
from .errors import GridCubeError
from .formats import dumps_map, loads_map, to_dot, to_table
from .topology import CubeSpec, cube_stats
from .verify import SearchStatus, oracle_search, verify

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridcube",
        description="Embed A x B grids into k-ary n-cubes with dilation 1, and verify embeddings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def grid_and_cube(p: argparse.ArgumentParser) -> None:
        p.add_argument("-A", "--rows", type=positive_int, required=True, help="grid rows")
        p.add_argument("-B", "--cols", type=positive_int, required=True, help="grid columns")
        p.add_argument("-k", type=positive_int, required=True, help="cube arity")
        p.add_argument("-n", type=positive_int, required=True, help="cube dimensions")

    embed = sub.add_parser("embed", help="build the embedding")
    grid_and_cube(embed)
    embed.add_argument("--format", choices=("json", "dot", "table"), default="json")
    embed.add_argument("--out", help="write to this file instead of stdout")
    embed.add_argument(
        "--inflate", action="store_true", help="round k up to a power of 2 first"
    )

    ver = sub.add_parser("verify", help="check a JSON embedding map")
    ver.add_argument("map_path", help="JSON map file, or - for stdin")

    orc = sub.add_parser("oracle", help="brute-force search (small instances)")
    grid_and_cube(orc)
    orc.add_argument("--budget", type=positive_int, default=1_000_000, help="max placements")
    orc.add_argument("--out", help="write a found map here as JSON")

    info = sub.add_parser("info", help="cube statistics")
    info.add_argument("-k", type=positive_int, required=True)
    info.add_argument("-n", type=positive_int, required=True)
    info.add_argument("--dot", action="store_true", help="print the cube as DOT instead")
    return parser


def _write(text: str, out: TextIO, path: Optional[str] = None) -> None:
    if path is None:
        out.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _embed(args: argparse.Namespace, out: TextIO) -> int:
    grid = GridSpec(args.rows, args.cols)
    cube = inflate_k(grid, args.k, args.n) if args.inflate else CubeSpec(args.k, args.n)
    emap = embed_grid(grid, cube)
    if args.format == "json":
        text = dumps_map(emap)
    elif args.format == "dot":
        text = to_dot(cube, emap)
    else:
        text = to_table(emap)
    _write(text, out, args.out)
    return EXIT_OK


def _verify(args: argparse.Namespace, out: TextIO) -> int:
    if args.map_path == "-":
        text = sys.stdin.read()
    else:
        with open(args.map_path, encoding="utf-8") as fh:
            text = fh.read()
    report = verify(loads_map(text))
    out.write(json.dumps(report.to_json()) + "\n")
    return EXIT_OK if report.isomorphic else EXIT_FAILURE


def _oracle(args: argparse.Namespace, out: TextIO) -> int:
    grid = GridSpec(args.rows, args.cols)
    result = oracle_search(grid, CubeSpec(args.k, args.n), args.budget)
    out.write(f"{result.status.value}\n")
    if result.embedding is not None and args.out:
        _write(dumps_map(result.embedding), out, args.out)
    return EXIT_OK if result.status is SearchStatus.FOUND else EXIT_FAILURE


def _info(args: argparse.Namespace, out: TextIO) -> int:
    cube = CubeSpec(args.k, args.n)
    if args.dot:
        out.write(to_dot(cube))
        return EXIT_OK
    stats = cube_stats(cube)
    out.write(
        f"nodes {stats.node_count}\n"
        f"edges {stats.edge_count}\n"
        f"degree {stats.degree}\n"
        f"diameter {stats.diameter}\n"
    )
    return EXIT_OK


HANDLERS = {"embed": _embed, "verify": _verify, "oracle": _oracle, "info": _info}


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return HANDLERS[args.command](args, out)
    except GridCubeError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_FAILURE
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_FAILURE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
