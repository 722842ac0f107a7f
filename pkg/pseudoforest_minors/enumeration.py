"""Isomorph-free enumeration of small graphs by vertex augmentation."""

import logging
from collections.abc import Iterable, Iterator, Sequence
from multiprocessing import Pool
from typing import Callable, Optional, TypeVar

from tqdm import tqdm

from .canon import canonical_form
from .codec import decode_graph6, encode_graph6
from .config import EnumerationConfig
from .errors import EnumerationLimitError
from .graph import Graph, iter_bits
from .models import EnumerationLevel

logger = logging.getLogger(__name__)

MAX_ENUMERATION_N = 10

# Number of isomorphism classes per vertex count.
CENSUS_ALL = {
    1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668, 10: 12005168,
}
CENSUS_CONNECTED = {
    1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080, 10: 11716571,
}

T = TypeVar("T")
R = TypeVar("R")

_levels: dict[tuple[int, bool], EnumerationLevel] = {}


def batched(items: Sequence[T], size: int) -> list[list[T]]:
    return [list(items[i : i + size]) for i in range(0, len(items), size)]


def parallel_map(
    worker: Callable[[T], R],
    tasks: Sequence[T],
    config: EnumerationConfig,
    desc: str,
) -> Iterator[R]:
    """Apply ``worker`` to every task, in order, over ``config.jobs`` processes."""
    bar = tqdm(total=len(tasks), desc=desc, disable=not config.progress)
    try:
        if config.jobs > 1 and len(tasks) > 1:
            with Pool(processes=config.jobs) as pool:
                for result in pool.imap(worker, tasks):
                    bar.update(1)
                    yield result
        else:
            for task in tasks:
                result = worker(task)
                bar.update(1)
                yield result
    finally:
        bar.close()


def _augment_batch(task: tuple[list[str], bool]) -> set[str]:
    forms, connected_only = task
    found: set[str] = set()
    for g6 in forms:
        graph = decode_graph6(g6)
        start = 1 if connected_only else 0
        for mask in range(start, 1 << graph.vertex_count):
            found.add(canonical_form(graph.add_vertex(iter_bits(mask))))
    return found


def _check_n(n: int, config: EnumerationConfig) -> None:
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise EnumerationLimitError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}")
    if n == MAX_ENUMERATION_N and not config.allow_n10:
        raise EnumerationLimitError("the 10-vertex level must be enabled explicitly (allow_n10)")


def enumerate_level(
    n: int, connected_only: bool = False, config: Optional[EnumerationConfig] = None
) -> EnumerationLevel:
    """Canonical forms of every graph (or connected graph) on ``n`` vertices.

    Level n extends each level n-1 representative by one vertex with every
    neighbour set; a connected graph always has a vertex whose deletion keeps it
    connected, so the connected levels only extend connected representatives.
    """
    config = config or EnumerationConfig()
    _check_n(n, config)
    key = (n, connected_only)
    if key in _levels:
        return _levels[key]

    if n == 1:
        forms: tuple[str, ...] = (encode_graph6(Graph(1)),)
    else:
        parents = enumerate_level(n - 1, connected_only, config).forms
        tasks = [(batch, connected_only) for batch in batched(parents, config.batch_size)]
        merged: set[str] = set()
        for found in parallel_map(_augment_batch, tasks, config, f"n={n}"):
            merged |= found
        forms = tuple(sorted(merged))

    level = EnumerationLevel(n=n, connected_only=connected_only, forms=forms)
    _levels[key] = level
    kind = "connected graphs" if connected_only else "graphs"
    logger.info(f"Enumerated level n={n}: {len(forms)} {kind}")
    return level


def enumerate_graphs(
    n: int, connected_only: bool = False, config: Optional[EnumerationConfig] = None
) -> Iterator[Graph]:
    for g6 in enumerate_level(n, connected_only, config).forms:
        yield decode_graph6(g6)


def graphs_up_to(
    max_n: int, connected_only: bool = False, config: Optional[EnumerationConfig] = None
) -> Iterator[Graph]:
    for n in range(1, max_n + 1):
        yield from enumerate_graphs(n, connected_only, config)


def census_matches(level: EnumerationLevel) -> bool:
    census = CENSUS_CONNECTED if level.connected_only else CENSUS_ALL
    return census.get(level.n) == len(level.forms)


def forms_of(graphs: Iterable[Graph]) -> set[str]:
    return {canonical_form(graph) for graph in graphs}
