"""Command-line front end (``pfminors``).

Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 usage or input error.
"""

import argparse
import json
import logging
import re
import sys
from typing import Optional

from pydantic import ValidationError

from .canon import minimal_labelling
from .catalog import build_catalog, export_catalog, lookup
from .codec import (
    decode_graph6,
    encode_graph6,
    parse_edge_list,
    read_graph6_lines,
    read_graphs,
    write_dot,
    write_edge_list,
)
from .config import SearchConfig
from .decomposition import (
    block_vertex_sets,
    cut_vertices,
    triconnected_components,
    wheel_certificate,
)
from .errors import PseudoforestMinorsError
from .graph import Graph
from .minors import contains_any_minor, contains_minor, contains_topological_minor
from .recognition import class_by_name, find_apex
from .verify import CatalogVerifier, pseudoforest_obstructions, search_obstructions

logger = logging.getLogger(__name__)

_CATALOG_NAME = re.compile(r"^O\d_\d+$")


class InputError(Exception):
    """Unreadable input file."""


def _read_text(source: str) -> str:
    name = "stdin" if source == "-" else source
    try:
        if source == "-":
            return sys.stdin.read()
        with open(source, encoding="utf-8") as handle:
            return handle.read()
    except UnicodeDecodeError as e:
        raise InputError(f"{name} is not valid UTF-8 text: {e}") from e
    except OSError as e:
        raise InputError(f"cannot read {name}: {e}") from e


def _resolve_graph(value: str) -> Graph:
    """A catalog name or a graph6 string."""
    value = value.strip()
    if _CATALOG_NAME.match(value):
        return lookup(value)
    return decode_graph6(value)


def _write(text: str) -> None:
    sys.stdout.write(text)


# -- subcommands ------------------------------------------------------------------


def _cmd_check(args: argparse.Namespace) -> int:
    cls = class_by_name(args.cls)
    graphs = read_graphs(_read_text(args.input))
    if cls.name == "apex-pseudoforest":
        named = list(zip(build_catalog().names(), build_catalog().graphs()))
    else:
        named = list(zip(["diamond", "butterfly"], pseudoforest_obstructions()))
    all_members = True
    for graph in graphs:
        fields = [encode_graph6(graph)]
        if cls.test(graph):
            fields.append("MEMBER")
            if cls.name == "apex-pseudoforest" and graph.vertex_count:
                fields.append(f"apex={find_apex(graph)}")
        else:
            all_members = False
            fields.append("NONMEMBER")
            if args.witness:
                found = contains_any_minor(graph, [g for _, g in named])
                if found is not None:
                    fields.append(f"obstruction={named[found[0]][0]}")
        _write(" ".join(fields) + "\n")
    return 0 if all_members else 1


def _cmd_minor(args: argparse.Namespace) -> int:
    host = _resolve_graph(args.host)
    pattern = _resolve_graph(args.pattern)
    if args.topological:
        embedding = contains_topological_minor(host, pattern)
        if embedding is None:
            _write("NOT-FOUND\n")
            return 1
        _write("FOUND\n")
        if args.witness:
            for a, v in embedding.branch_vertices.items():
                _write(f"branch {a}: {v}\n")
            for routed in embedding.paths:
                a, b = routed.pattern_edge
                _write(f"path {a}-{b}: {' '.join(map(str, routed.vertices))}\n")
        return 0

    model = contains_minor(host, pattern)
    if model is None:
        _write("NOT-FOUND\n")
        return 1
    _write("FOUND\n")
    if args.witness:
        for a, vertices in model.branch_sets.items():
            _write(f"branch {a}: {' '.join(map(str, vertices))}\n")
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    status = 0
    for graph in read_graphs(_read_text(args.input)):
        g6 = encode_graph6(graph)
        if args.mode == "blocks":
            record = {
                "graph": g6,
                "cut_vertices": sorted(cut_vertices(graph)),
                "blocks": [list(vertices) for vertices in block_vertex_sets(graph)],
            }
            _write(json.dumps(record) + "\n")
        elif args.mode == "triconnected":
            decomposition = triconnected_components(graph, prefer=args.prefer)
            _write(decomposition.model_dump_json() + "\n")
        else:
            certificate = wheel_certificate(graph)
            if certificate is None:
                status = 1
                _write(json.dumps({"graph": g6, "certificate": None}) + "\n")
            else:
                dumped = json.loads(certificate.model_dump_json())
                _write(json.dumps({"graph": g6, "certificate": dumped}) + "\n")
    return status


def _cmd_catalog(args: argparse.Namespace) -> int:
    if args.action == "export":
        _write(export_catalog(args.format))
        return 0
    entry = build_catalog().get(args.name)
    if args.format == "g6":
        _write(encode_graph6(entry.graph) + "\n")
    elif args.format == "dot":
        _write(write_dot(entry.graph, entry.name))
    else:
        _write(write_edge_list(entry.graph))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    verifier = CatalogVerifier.create(
        {
            "equivalence_n": args.equivalence_n,
            "search_n": args.search_n,
            "structural_n": args.structural_n,
            "prune": args.prune,
            "allow_n10": args.allow_n10,
            "jobs": args.jobs,
            "progress": args.progress,
        },
        source=read_graphs(_read_text(args.input)) if args.input else None,
    )
    report = verifier.run()
    _write(report.to_lines() if args.format == "lines" else report.to_text())
    return 0 if report.passed else 1


def _cmd_search(args: argparse.Namespace) -> int:
    config = SearchConfig.model_validate(
        {
            "class_name": args.cls,
            "max_n": args.max_n,
            "connected_only": args.connected,
            "prune": args.prune,
            "allow_n10": args.allow_n10,
            "jobs": args.jobs,
            "progress": args.progress,
        }
    )
    source = read_graphs(_read_text(args.input)) if args.input else None
    found = search_obstructions(
        class_by_name(config.class_name),
        config.max_n,
        config.connected_only,
        config.prune,
        config,
        source,
    )
    for g6 in sorted(found, key=lambda form: (len(form), form)):
        _write(g6 + "\n")
    return 0


def _cmd_convert(args: argparse.Namespace) -> int:
    text = _read_text(args.input)
    if args.source == "g6":
        graphs = list(read_graph6_lines(text))
    else:
        graphs = [parse_edge_list(text)]
    for index, graph in enumerate(graphs):
        if args.minimal:
            graph = graph.relabel(minimal_labelling(graph))
        if args.target == "g6":
            _write(encode_graph6(graph) + "\n")
        elif args.target == "edges":
            _write(write_edge_list(graph))
        else:
            name = args.name if len(graphs) == 1 else f"{args.name}_{index}"
            _write(write_dot(graph, name))
    return 0


# -- parser -------------------------------------------------------------------------


def _add_jobs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--jobs", type=int, default=1, help="worker processes")
    parser.add_argument("--allow-n10", action="store_true", help="enable the 10-vertex level")
    parser.add_argument("--progress", action="store_true", help="show progress bars")
    parser.add_argument("--input", help="graph6 stream used instead of enumeration ('-' = stdin)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pfminors",
        description="Pseudoforest and apex-pseudoforest minor toolkit",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="test class membership")
    check.add_argument(
        "--class", dest="cls", required=True, choices=["pseudoforest", "apex-pseudoforest"]
    )
    check.add_argument("--input", default="-", help="graph6 lines or one edge list ('-' = stdin)")
    check.add_argument("--witness", action="store_true", help="name an obstruction for non-members")
    check.set_defaults(func=_cmd_check)

    minor = sub.add_parser("minor", help="test minor containment")
    minor.add_argument("--host", required=True, help="graph6 string or catalog name")
    minor.add_argument("--pattern", required=True, help="graph6 string or catalog name")
    minor.add_argument("--topological", action="store_true")
    minor.add_argument("--witness", action="store_true")
    minor.set_defaults(func=_cmd_minor)

    decompose = sub.add_parser("decompose", help="connectivity structure of each input graph")
    decompose.add_argument(
        "--mode", required=True, choices=["blocks", "triconnected", "wheel-certificate"]
    )
    decompose.add_argument("--input", default="-")
    decompose.add_argument("--prefer", choices=["first", "last"], default="first")
    decompose.set_defaults(func=_cmd_decompose)

    catalog = sub.add_parser("catalog", help="export or look up obstruction catalog entries")
    catalog_sub = catalog.add_subparsers(dest="action", required=True)
    export = catalog_sub.add_parser("export")
    export.add_argument("--format", choices=["g6", "dot", "edges"], default="g6")
    show = catalog_sub.add_parser("lookup")
    show.add_argument("name")
    show.add_argument("--format", choices=["g6", "dot", "edges"], default="edges")
    catalog.set_defaults(func=_cmd_catalog)

    verify = sub.add_parser("verify-catalog", help="run the catalog verification suite")
    verify.add_argument("--equivalence-n", type=int, default=6)
    verify.add_argument("--search-n", type=int)
    verify.add_argument("--structural-n", type=int)
    verify.add_argument("--prune", action="store_true")
    verify.add_argument("--format", choices=["text", "lines"], default="text")
    _add_jobs(verify)
    verify.set_defaults(func=_cmd_verify)

    search = sub.add_parser("search-obstructions", help="exhaustive obstruction search")
    search.add_argument(
        "--class",
        dest="cls",
        required=True,
        choices=["pseudoforest", "apex-pseudoforest", "all-graphs"],
    )
    search.add_argument("--max-n", type=int, required=True)
    search.add_argument("--connected", action="store_true")
    search.add_argument("--prune", action="store_true")
    _add_jobs(search)
    search.set_defaults(func=_cmd_search)

    convert = sub.add_parser("convert", help="convert between graph formats")
    convert.add_argument("--from", dest="source", choices=["g6", "edges"], required=True)
    convert.add_argument("--to", dest="target", choices=["g6", "edges", "dot"], required=True)
    convert.add_argument("--input", default="-")
    convert.add_argument("--name", default="G", help="DOT graph name")
    convert.add_argument(
        "--minimal",
        action="store_true",
        help="relabel to the smallest graph6 string over all vertex orders",
    )
    convert.set_defaults(func=_cmd_convert)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (PseudoforestMinorsError, ValidationError, InputError) as e:
        print(f"pfminors: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
