"""Blocks, vertex connectivity, triconnected components and wheel-growth certificates."""

import logging
from collections.abc import Sequence
from itertools import combinations
from typing import Literal, Optional

import networkx as nx

from .canon import canonical_form, find_isomorphism
from .errors import DecompositionError, SplitPartitionError
from .graph import Graph, iter_bits, mask_of, popcount, wheel
from .models import (
    EdgeAddition,
    SeparatorTrace,
    TriconnectedDecomposition,
    VertexSplit,
    WheelCertificate,
)

logger = logging.getLogger(__name__)

Preference = Literal["first", "last"]


# -- blocks and connectivity ---------------------------------------------------


def cut_vertices(graph: Graph) -> frozenset[int]:
    return frozenset(nx.articulation_points(graph.to_networkx()))


def block_vertex_sets(graph: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the blocks; isolated vertices are K1 blocks."""
    found = [tuple(sorted(comp)) for comp in nx.biconnected_components(graph.to_networkx())]
    found.extend((v,) for v, row in enumerate(graph.rows) if not row)
    return sorted(found)


def blocks(graph: Graph) -> list[Graph]:
    return [graph.induced(vertices) for vertices in block_vertex_sets(graph)]


def _component_count(graph: Graph, allowed: int) -> int:
    return len(graph.component_masks(allowed))


def separators(graph: Graph, size: int) -> list[tuple[int, ...]]:
    """All vertex sets of ``size`` whose deletion increases the component count, sorted."""
    base = _component_count(graph, graph.vertex_mask)
    return [
        subset
        for subset in combinations(graph.vertices(), size)
        if _component_count(graph, graph.vertex_mask & ~mask_of(subset)) > base
    ]


def _disconnects(graph: Graph, subset: tuple[int, ...]) -> bool:
    return _component_count(graph, graph.vertex_mask & ~mask_of(subset)) >= 2


def vertex_connectivity(graph: Graph) -> int:
    """Size of a smallest separator; K_n gives n - 1, disconnected graphs give 0."""
    n = graph.vertex_count
    if n <= 1 or not graph.is_connected():
        return 0
    for k in range(1, n - 1):
        if any(_disconnects(graph, subset) for subset in combinations(graph.vertices(), k)):
            return k
    return n - 1


def is_triconnected(graph: Graph) -> bool:
    return graph.vertex_count >= 4 and vertex_connectivity(graph) >= 3


def is_clique(graph: Graph) -> bool:
    n = graph.vertex_count
    return graph.edge_count == n * (n - 1) // 2


# -- triconnected components ---------------------------------------------------


def augmented_components(graph: Graph, separator: Sequence[int]) -> list[Graph]:
    """One graph per component of G minus S: the component plus S, with S made a clique."""
    if any(not 0 <= v < graph.vertex_count for v in separator):
        raise DecompositionError(f"separator {tuple(separator)} is not a subset of V(G)")
    sep = mask_of(separator)
    pieces = []
    for comp in graph.component_masks(graph.vertex_mask & ~sep):
        piece = graph.induced(iter_bits(comp | sep))
        kept = sorted(iter_bits(comp | sep))
        positions = [kept.index(v) for v in sorted(separator)]
        for i, j in combinations(positions, 2):
            piece = piece.add_edge(i, j)
        pieces.append(piece)
    return pieces


def _trace(graph: Graph, prefer: Preference) -> SeparatorTrace:
    if not graph.is_connected():
        separator: tuple[int, ...] = ()
    elif (is_clique(graph) and graph.vertex_count <= 3) or is_triconnected(graph):
        return SeparatorTrace(graph=graph)
    else:
        found = separators(graph, 1) or separators(graph, 2)
        if not found:
            raise DecompositionError(f"no separator of size <= 2 in {graph!r}")
        separator = found[0] if prefer == "first" else found[-1]
    logger.debug(f"Splitting {graph.vertex_count}-vertex graph on separator {separator}")
    children = [_trace(piece, prefer) for piece in augmented_components(graph, separator)]
    return SeparatorTrace(graph=graph, separator=separator, children=children)


def triconnected_components(
    graph: Graph, prefer: Preference = "first"
) -> TriconnectedDecomposition:
    """Split on smallest separators until every piece is triconnected or a clique on <= 3 vertices.

    ``prefer`` picks the lexicographically first or last separator among those of minimum size.
    """
    trace = _trace(graph, prefer)
    return TriconnectedDecomposition(members=trace.leaves(), trace=trace)


def replay_trace(graph: Graph, trace: SeparatorTrace) -> list[Graph]:
    """Re-run the recorded splits from ``graph`` and return the members they produce."""
    if trace.graph != graph:
        raise DecompositionError("trace does not start at the given graph")
    if trace.separator is None:
        return [graph]
    pieces = augmented_components(graph, trace.separator)
    if len(pieces) != len(trace.children):
        raise DecompositionError(f"separator {trace.separator} yields {len(pieces)} pieces")
    return [
        member
        for piece, child in zip(pieces, trace.children)
        for member in replay_trace(piece, child)
    ]


def member_forms(decomposition: TriconnectedDecomposition) -> list[str]:
    """Canonical forms of the members as a sorted multiset."""
    return sorted(canonical_form(member) for member in decomposition.members)


# -- wheels, splits and certificates ------------------------------------------


def is_wheel(graph: Graph) -> Optional[int]:
    """r if the graph is isomorphic to wheel(r), else None."""
    n = graph.vertex_count
    if n < 4 or graph.edge_count != 2 * (n - 1):
        return None
    for hub in range(n):
        if graph.degree(hub) != n - 1:
            continue
        rim = graph.delete_vertex(hub)
        if rim.is_connected() and all(d == 2 for d in rim.degrees()):
            return n - 1
    return None


def split(graph: Graph, v: int, side_a: Sequence[int], side_b: Sequence[int]) -> Graph:
    """Replace v by adjacent v_A (keeps id v, neighbours A) and v_B (new last id, neighbours B)."""
    nbrs = graph.neighbor_mask(v)
    a, b = mask_of(side_a), mask_of(side_b)
    if popcount(nbrs) < 4:
        raise SplitPartitionError(f"vertex {v} has degree {popcount(nbrs)} < 4")
    if popcount(a) < 2 or popcount(b) < 2:
        raise SplitPartitionError("both sides of the partition need at least 2 vertices")
    if a & b or a | b != nbrs:
        raise SplitPartitionError(f"sides do not partition the neighbourhood of {v}")
    n = graph.vertex_count
    rows = list(graph.rows)
    rows[v] = a | (1 << n)
    for w in iter_bits(b):
        rows[w] = (rows[w] & ~(1 << v)) | (1 << n)
    rows.append(b | (1 << v))
    return Graph.from_rows(rows)


def _move_last(n: int, y: int) -> list[int]:
    return [w if w < y else (n - 1 if w == y else w - 1) for w in range(n)]


class _CertificateSearch:
    """Backward search; the invariant is replay(base, steps) == graph.relabel(perm)."""

    def __init__(self) -> None:
        self.dead: set[str] = set()

    def reduce(self, graph: Graph) -> Optional[tuple[int, list, list[int]]]:
        r = is_wheel(graph)
        if r is not None:
            perm = find_isomorphism(graph, wheel(r))
            if perm is None:
                raise DecompositionError("wheel recognised but not mapped onto wheel(r)")
            return r, [], perm
        key = canonical_form(graph)
        if key in self.dead:
            return None
        found = self._by_deletion(graph) or self._by_contraction(graph)
        if found is None:
            self.dead.add(key)
        return found

    def _by_deletion(self, graph: Graph) -> Optional[tuple[int, list, list[int]]]:
        for u, v in graph.edges():
            smaller = graph.delete_edge(u, v)
            if not is_triconnected(smaller):
                continue
            found = self.reduce(smaller)
            if found is not None:
                r, steps, perm = found
                edge = tuple(sorted((perm[u], perm[v])))
                return r, steps + [EdgeAddition(edge=edge)], perm
        return None

    def _by_contraction(self, graph: Graph) -> Optional[tuple[int, list, list[int]]]:
        n = graph.vertex_count
        for x, y in graph.edges():
            if graph.neighbor_mask(x) & graph.neighbor_mask(y):
                continue
            if graph.degree(x) < 3 or graph.degree(y) < 3:
                continue
            move = _move_last(n, y)
            moved = graph.relabel(move)
            mx, last = move[x], n - 1
            smaller = moved.contract_edge(mx, last)
            if not is_triconnected(smaller):
                continue
            found = self.reduce(smaller)
            if found is None:
                continue
            r, steps, perm = found
            side_a = moved.neighbor_mask(mx) & ~(1 << last)
            side_b = moved.neighbor_mask(last) & ~(1 << mx)
            step = VertexSplit(
                vertex=perm[mx],
                side_a=tuple(sorted(perm[w] for w in iter_bits(side_a))),
                side_b=tuple(sorted(perm[w] for w in iter_bits(side_b))),
            )
            extended = perm + [last]
            return r, steps + [step], [extended[move[w]] for w in range(n)]
        return None


def wheel_certificate(graph: Graph) -> Optional[WheelCertificate]:
    """A split/edge-addition sequence growing a wheel into the graph; None unless triconnected."""
    if not is_triconnected(graph):
        return None
    found = _CertificateSearch().reduce(graph)
    if found is None:
        return None
    r, steps, _ = found
    return WheelCertificate(base_r=r, steps=steps)


def replay_certificate(certificate: WheelCertificate) -> Graph:
    graph = wheel(certificate.base_r)
    for step in certificate.steps:
        if isinstance(step, EdgeAddition):
            graph = graph.add_edge(*step.edge)
        else:
            graph = split(graph, step.vertex, step.side_a, step.side_b)
    return graph


def hamiltonian_cycle(graph: Graph) -> Optional[list[int]]:
    """A Hamiltonian cycle starting at vertex 0, found by exhaustive search."""
    n = graph.vertex_count
    if n < 3:
        return None
    rows = graph.rows
    full = graph.vertex_mask
    route = [0]

    def extend(v: int, visited: int) -> bool:
        if visited == full:
            return bool(rows[v] & 1)
        for w in iter_bits(rows[v] & ~visited):
            route.append(w)
            if extend(w, visited | (1 << w)):
                return True
            route.pop()
        return False

    return route if extend(0, 1) else None
