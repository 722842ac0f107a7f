"""Canonical forms and isomorphism for small graphs.

The canonical form is the graph6 string of the smallest adjacency key reached by
colour refinement followed by individualisation of the first non-singleton cell.
It is a complete invariant but not, in general, the smallest graph6 string over all
relabellings; ``minimal_graph6`` computes that one by an exact prefix search.
"""

from functools import lru_cache
from typing import Optional

import networkx as nx

from .codec import encode_graph6
from .errors import CanonError
from .graph import Graph, iter_bits

MAX_CANON_VERTICES = 16


def _refine(rows: tuple[int, ...], colors: list[int]) -> list[int]:
    """Equitable refinement; colours are ranks of sorted signatures, so they stay invariant."""
    cells = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in iter_bits(row))))
            for v, row in enumerate(rows)
        ]
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        colors = [ranking[sig] for sig in signatures]
        if len(ranking) == cells:
            return colors
        cells = len(ranking)


def _key(rows: tuple[int, ...], labels: list[int]) -> int:
    n = len(rows)
    order = [0] * n
    for v, label in enumerate(labels):
        order[label] = v
    key = 0
    for j in range(1, n):
        row = rows[order[j]]
        for i in range(j):
            key = (key << 1) | ((row >> order[i]) & 1)
    return key


def _twins(rows: tuple[int, ...], u: int, w: int) -> bool:
    strip = ~((1 << u) | (1 << w))
    return rows[u] & strip == rows[w] & strip


def _search(rows: tuple[int, ...], colors: list[int], best: list) -> None:
    counts: dict[int, list[int]] = {}
    for v, color in enumerate(colors):
        counts.setdefault(color, []).append(v)
    target = next((color for color in sorted(counts) if len(counts[color]) > 1), None)
    if target is None:
        key = _key(rows, colors)
        if best[0] is None or key < best[0]:
            best[0] = key
            best[1] = colors
        return

    cell = counts[target]
    explored: list[int] = []
    for v in cell:
        # swapping twins is an automorphism, so their subtrees give the same keys
        if any(_twins(rows, u, v) for u in explored):
            continue
        explored.append(v)
        split = [
            2 * color + (1 if color == target and u != v else 0) for u, color in enumerate(colors)
        ]
        _search(rows, _refine(rows, split), best)


def canonical_labelling(graph: Graph) -> list[int]:
    """Permutation ``p`` with ``graph.relabel(p)`` equal to the canonical representative."""
    n = graph.vertex_count
    if n > MAX_CANON_VERTICES:
        raise CanonError(f"canonical form supports at most {MAX_CANON_VERTICES} vertices, got {n}")
    if n == 0:
        return []
    rows = graph.rows
    best: list = [None, None]
    _search(rows, _refine(rows, [0] * n), best)
    return best[1]


@lru_cache(maxsize=1 << 16)
def canonical_form(graph: Graph) -> str:
    return encode_graph6(graph.relabel(canonical_labelling(graph)))


def canonical_graph(graph: Graph) -> Graph:
    return graph.relabel(canonical_labelling(graph))


def minimal_labelling(graph: Graph) -> list[int]:
    """Permutation giving the lexicographically smallest graph6 string of ``graph``.

    Vertices are placed one position at a time. The column of a candidate is its
    adjacency to the vertices already placed, and only candidates with the smallest
    column can lead to the minimum. Branches are cut once their columns exceed the
    best complete labelling found so far.
    """
    n = graph.vertex_count
    if n > MAX_CANON_VERTICES:
        raise CanonError(f"canonical form supports at most {MAX_CANON_VERTICES} vertices, got {n}")
    rows = graph.rows
    best_columns: list[int] = []
    best_order: list[int] = []

    def place(order: list[int], columns: list[int], pending: dict[int, int]) -> None:
        if best_order and columns > best_columns[: len(columns)]:
            return
        if not pending:
            if not best_order or columns < best_columns:
                best_columns[:] = columns
                best_order[:] = order
            return
        low = min(pending.values())
        explored: list[int] = []
        for v in sorted(pending):
            # swapping twins fixes every placed vertex, so their subtrees give the same keys
            if pending[v] != low or any(_twins(rows, u, v) for u in explored):
                continue
            explored.append(v)
            rest = {w: (c << 1) | ((rows[v] >> w) & 1) for w, c in pending.items() if w != v}
            place(order + [v], columns + [low], rest)

    place([], [], {v: 0 for v in range(n)})
    labels = [0] * n
    for position, v in enumerate(best_order):
        labels[v] = position
    return labels


def minimal_graph6(graph: Graph) -> str:
    """The smallest graph6 string over all relabellings of ``graph``."""
    return encode_graph6(graph.relabel(minimal_labelling(graph)))


def _quick_invariants(first: Graph, second: Graph) -> bool:
    return (
        first.vertex_count == second.vertex_count
        and first.edge_count == second.edge_count
        and first.degree_sequence() == second.degree_sequence()
    )


def isomorphic(first: Graph, second: Graph) -> bool:
    if not _quick_invariants(first, second):
        return False
    if first.vertex_count > MAX_CANON_VERTICES:
        return nx.is_isomorphic(first.to_networkx(), second.to_networkx())
    return canonical_form(first) == canonical_form(second)


def find_isomorphism(first: Graph, second: Graph) -> Optional[list[int]]:
    """A permutation ``p`` with ``first.relabel(p) == second``, or None."""
    if not _quick_invariants(first, second):
        return None
    to_canon = canonical_labelling(first)
    other = canonical_labelling(second)
    if first.relabel(to_canon) != second.relabel(other):
        return None
    back = [0] * len(other)
    for v, label in enumerate(other):
        back[label] = v
    return [back[label] for label in to_canon]
