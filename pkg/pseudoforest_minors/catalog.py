"""The 33 minor obstructions for apex-pseudoforests.

Connected entries are stored as edge lists transcribed from drawings; vertex ids
follow the drawing's node order. The disconnected entries are built from the
diamond and the butterfly.
"""

import logging
from functools import lru_cache
from typing import Literal, Optional

from .codec import encode_graph6, write_dot, write_edge_list
from .graph import Graph, butterfly, complete, complete_bipartite, diamond, disjoint_union, prism
from .models import CatalogEntry, ObstructionCatalog

logger = logging.getLogger(__name__)

ExportFormat = Literal["g6", "dot", "edges"]

CLASS_SIZES = {0: 3, 1: 12, 2: 15, 3: 3}
CATALOG_SIZE = sum(CLASS_SIZES.values())

# name: (vertex count, "u-v u-v ...")
_CONNECTED: dict[str, tuple[int, str]] = {
    "O1_1": (8, "0-1 0-2 1-2 2-3 2-4 3-4 5-6 5-7 3-5 4-5 6-7"),
    "O1_2": (8, "0-1 0-2 1-2 2-3 2-6 3-4 6-7 4-5 5-7 3-6 4-7"),
    "O1_3": (8, "0-1 0-2 1-2 2-3 2-4 3-4 5-6 5-7 3-5 4-5 3-6 4-7"),
    "O1_4": (7, "0-1 0-6 1-6 2-3 2-4 2-5 3-4 3-5 4-6 5-6"),
    "O1_5": (7, "0-1 0-2 1-2 2-3 2-4 2-5 3-4 3-5 4-5 4-6 5-6"),
    "O1_6": (9, "0-1 0-2 1-2 2-3 2-4 3-4 3-5 4-5 3-7 4-6 2-6 2-7 3-8 4-8"),
    "O1_7": (9, "0-2 0-1 1-2 2-3 3-4 4-5 5-6 6-7 7-8 2-8 2-4 4-6 6-8"),
    "O1_8": (9, "0-1 0-2 1-2 3-4 3-5 4-5 6-7 6-8 7-8 2-3 1-8 4-8"),
    "O1_9": (9, "0-1 0-2 1-2 3-4 3-5 4-5 6-7 6-8 7-8 2-3 2-7 3-6"),
    "O1_10": (9, "0-1 0-2 1-2 3-4 3-5 4-5 6-7 6-8 7-8 2-3 3-8 2-8"),
    "O1_11": (8, "0-1 1-2 0-2 1-4 2-3 2-4 3-4 3-5 4-5 1-6 6-7 1-7"),
    "O1_12": (9, "0-1 0-2 1-2 2-4 3-4 2-3 4-5 4-6 5-6 6-7 6-8 7-8 2-6"),
    "O2_1": (6, "0-1 0-2 0-4 0-5 1-3 2-3 3-4 3-5 1-4 2-5"),
    "O2_2": (6, "0-1 0-2 1-2 1-3 3-5 2-3 3-4 1-4 2-5 4-5"),
    "O2_3": (8, "0-1 0-2 3-4 3-5 4-6 1-6 5-7 2-7 1-2 1-4 2-5 4-5"),
    "O2_4": (7, "0-4 1-4 0-2 0-3 1-2 1-3 2-3 0-5 4-5 4-6 1-6"),
    "O2_5": (6, "0-1 0-4 1-2 4-5 2-3 3-5 1-4 2-5 1-5 2-4"),
    "O2_6": (7, "2-3 0-5 0-6 3-4 4-6 2-5 3-6 2-6 3-5 1-5 0-1"),
    "O2_7": (8, "0-3 1-6 1-2 0-2 2-3 2-6 3-4 6-7 4-5 5-7 3-6 4-7"),
    "O2_8": (7, "0-2 1-2 0-3 1-4 2-4 2-3 3-4 4-5 3-5 3-6 4-6 2-6"),
    "O2_9": (7, "0-1 0-2 1-2 1-3 2-4 3-5 3-6 4-5 4-6 5-6"),
    "O2_10": (8, "0-1 0-3 1-3 1-5 1-2 1-7 2-5 2-7 3-4 3-5 3-6 4-5 5-6"),
    "O2_11": (9, "0-2 1-2 0-3 1-4 2-4 2-3 3-4 4-5 3-5 3-8 4-8 3-7 2-7 4-6 2-6"),
    "O2_12": (8, "0-3 1-6 1-2 0-2 2-3 2-6 3-4 6-7 4-5 5-7 3-7 4-7"),
    "O2_13": (7, "0-1 0-2 1-2 1-3 1-5 3-4 3-6 3-5 2-5 4-6 5-6"),
    "O2_14": (9, "0-1 0-2 1-2 3-4 3-5 4-5 6-7 6-8 7-8 2-3 1-7 4-6"),
    "O2_15": (8, "0-1 0-2 1-2 3-4 3-5 4-5 6-7 1-6 4-6 5-7 0-7"),
}


def _parse(n: int, edges: str) -> Graph:
    pairs = []
    for token in edges.split():
        u, v = token.split("-")
        pairs.append((int(u), int(v)))
    return Graph(n, pairs)


def _entries() -> list[CatalogEntry]:
    k5_minus_edge = complete(5).delete_edge(3, 4)
    graphs: dict[str, Graph] = {
        "O0_1": disjoint_union(diamond(), diamond()),
        "O0_2": disjoint_union(butterfly(), butterfly()),
        "O0_3": disjoint_union(diamond(), butterfly()),
    }
    graphs.update({name: _parse(n, edges) for name, (n, edges) in _CONNECTED.items()})
    graphs.update({"O3_1": prism(), "O3_2": complete_bipartite(3, 3), "O3_3": k5_minus_edge})
    return [
        CatalogEntry(name=name, connectivity_class=int(name[1]), graph=graph)
        for name, graph in graphs.items()
    ]


@lru_cache(maxsize=1)
def build_catalog() -> ObstructionCatalog:
    catalog = ObstructionCatalog(entries=tuple(_entries()))
    logger.debug(f"Built obstruction catalog with {len(catalog)} entries")
    return catalog


def lookup(name: str) -> Graph:
    return build_catalog().get(name).graph


def export_catalog(fmt: ExportFormat, catalog: Optional[ObstructionCatalog] = None) -> str:
    """Serialise every entry in catalog order."""
    if catalog is None:
        catalog = build_catalog()
    if fmt == "g6":
        return "".join(f"{encode_graph6(entry.graph)}\n" for entry in catalog.entries)
    if fmt == "dot":
        return "".join(write_dot(entry.graph, entry.name) for entry in catalog.entries)
    if fmt == "edges":
        return "".join(
            f"# {entry.name}\n{write_edge_list(entry.graph)}" for entry in catalog.entries
        )
    raise ValueError(f"unknown export format {fmt!r}")
