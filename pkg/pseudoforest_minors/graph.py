"""Immutable simple undirected graphs on the vertex set 0..n-1.

Adjacency is one bitset row per vertex: bit ``j`` of ``rows[i]`` is set iff
``{i, j}`` is an edge. Every operation returns a fresh graph whose vertex ids
are dense again; surviving vertices keep their relative order.
"""

from collections.abc import Iterable, Iterator, Sequence
from typing import Optional

import networkx as nx

from .errors import (
    GraphSizeError,
    InvalidGraphError,
    MissingEdgeError,
    VertexRangeError,
)

MAX_VERTICES = 62


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _drop_bit(row: int, v: int) -> int:
    return (row & ((1 << v) - 1)) | ((row >> (v + 1)) << v)


class Graph:
    """A simple undirected graph with vertices ``0..n-1``."""

    __slots__ = ("_n", "_rows", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0 or n > MAX_VERTICES:
            raise GraphSizeError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise InvalidGraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"edge ({u}, {v}) outside [0, {n})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._n = n
        self._rows = tuple(rows)
        self._hash: Optional[int] = None

    @classmethod
    def from_rows(cls, rows: Sequence[int], check: bool = False) -> "Graph":
        """Build a graph straight from adjacency bitsets."""
        if check:
            n = len(rows)
            if n > MAX_VERTICES:
                raise GraphSizeError(f"vertex count {n} exceeds {MAX_VERTICES}")
            for u, row in enumerate(rows):
                if row >> n or (row >> u) & 1:
                    raise InvalidGraphError(f"row {u} has a loop or out-of-range bit")
                for v in iter_bits(row):
                    if not (rows[v] >> u) & 1:
                        raise InvalidGraphError(f"asymmetric adjacency at ({u}, {v})")
        graph = cls.__new__(cls)
        graph._n = len(rows)
        graph._rows = tuple(rows)
        graph._hash = None
        return graph

    # -- basic queries -----------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    @property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self._rows) // 2

    def vertices(self) -> range:
        return range(self._n)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        return [
            (u, v) for u, row in enumerate(self._rows) for v in iter_bits(row >> (u + 1) << (u + 1))
        ]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise VertexRangeError(f"vertex {v} outside [0, {self._n})")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self._rows[u] >> v) & 1)

    def neighbor_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._rows[v]

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.neighbor_mask(v)))

    def degree(self, v: int) -> int:
        return popcount(self.neighbor_mask(v))

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self._rows]

    def degree_sequence(self) -> tuple[int, ...]:
        """Vertex degrees sorted in descending order."""
        return tuple(sorted(self.degrees(), reverse=True))

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def reach(self, start: int, allowed: Optional[int] = None) -> int:
        """Bitmask of vertices reachable from the ``start`` mask inside ``allowed``."""
        rows = self._rows
        allowed = self.vertex_mask if allowed is None else allowed
        seen = start & allowed
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= rows[v]
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def component_masks(self, allowed: Optional[int] = None) -> list[int]:
        """Connected components of ``G[allowed]`` as bitmasks, ordered by least vertex."""
        remaining = self.vertex_mask if allowed is None else allowed
        masks = []
        while remaining:
            comp = self.reach(remaining & -remaining, remaining)
            masks.append(comp)
            remaining &= ~comp
        return masks

    def components(self) -> list[frozenset[int]]:
        return [frozenset(iter_bits(mask)) for mask in self.component_masks()]

    def is_connected(self) -> bool:
        return len(self.component_masks()) <= 1

    def component_edge_count(self, mask: int) -> int:
        return sum(popcount(self._rows[v] & mask) for v in iter_bits(mask)) // 2

    @property
    def cycle_rank(self) -> int:
        """|E| - |V| + number of components; never increases when taking minors."""
        return self.edge_count - self._n + len(self.component_masks())

    def bridges(self) -> list[tuple[int, int]]:
        found = []
        for u, v in self.edges():
            without = self.delete_edge(u, v)
            if not (without.reach(1 << u) >> v) & 1:
                found.append((u, v))
        return found

    def is_simplicial(self, v: int) -> bool:
        nbrs = self.neighbor_mask(v)
        return all((self._rows[u] | (1 << u)) & nbrs == nbrs for u in iter_bits(nbrs))

    # -- minor-generating operations --------------------------------------

    def delete_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        return Graph.from_rows([_drop_bit(row, v) for u, row in enumerate(self._rows) if u != v])

    def delete_vertices(self, vertices: Iterable[int]) -> "Graph":
        removed = mask_of(vertices)
        for v in iter_bits(removed):
            self._check_vertex(v)
        return self.induced(v for v in range(self._n) if not (removed >> v) & 1)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """The subgraph induced by ``vertices``, relabelled in ascending id order."""
        kept = sorted(set(vertices))
        for v in kept:
            self._check_vertex(v)
        position = {v: i for i, v in enumerate(kept)}
        keep_mask = mask_of(kept)
        rows = []
        for v in kept:
            row = 0
            for w in iter_bits(self._rows[v] & keep_mask):
                row |= 1 << position[w]
            rows.append(row)
        return Graph.from_rows(rows)

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise MissingEdgeError(f"edge ({u}, {v}) not in graph")
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph.from_rows(rows)

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise InvalidGraphError(f"loop at vertex {u}")
        rows = list(self._rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph.from_rows(rows)

    def add_vertex(self, neighbors: Iterable[int] = ()) -> "Graph":
        """Append vertex ``n`` adjacent to ``neighbors``."""
        nbrs = mask_of(neighbors)
        for w in iter_bits(nbrs):
            self._check_vertex(w)
        if self._n + 1 > MAX_VERTICES:
            raise GraphSizeError(f"vertex count would exceed {MAX_VERTICES}")
        n = self._n
        rows = [row | (((nbrs >> u) & 1) << n) for u, row in enumerate(self._rows)]
        rows.append(nbrs)
        return Graph.from_rows(rows)

    def contract_edge(self, u: int, v: int) -> "Graph":
        """Contract ``{u, v}``; the merged vertex takes the smaller id.

        Parallel edges are merged and the loop is dropped, so the result is simple.
        """
        if not self.has_edge(u, v):
            raise MissingEdgeError(f"edge ({u}, {v}) not in graph")
        x, y = min(u, v), max(u, v)
        rows = list(self._rows)
        rows[x] = (rows[x] | rows[y]) & ~((1 << x) | (1 << y))
        for w in iter_bits(self._rows[y]):
            if w != x:
                rows[w] |= 1 << x
        del rows[y]
        return Graph.from_rows([_drop_bit(row, y) for row in rows])

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Rename vertex ``v`` to ``permutation[v]``."""
        if sorted(permutation) != list(range(self._n)):
            raise InvalidGraphError("relabelling is not a permutation of the vertex set")
        rows = [0] * self._n
        for v, row in enumerate(self._rows):
            new_row = 0
            for w in iter_bits(row):
                new_row |= 1 << permutation[w]
            rows[permutation[v]] = new_row
        return Graph.from_rows(rows)

    # -- conversions and dunders ------------------------------------------

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self.edges())
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({self._n}, {self.edges()})"


def disjoint_union(first: Graph, second: Graph) -> Graph:
    """``second`` is shifted to ids ``first.n .. first.n + second.n - 1``."""
    if first.vertex_count + second.vertex_count > MAX_VERTICES:
        raise GraphSizeError(f"union would exceed {MAX_VERTICES} vertices")
    shift = first.vertex_count
    return Graph.from_rows(first.rows + tuple(row << shift for row in second.rows))


def _require(value: int, bound: int, what: str) -> None:
    if value < bound:
        raise InvalidGraphError(f"{what} needs r >= {bound}, got {value}")


def empty(n: int) -> Graph:
    return Graph(n)


def complete(r: int) -> Graph:
    _require(r, 1, "complete graph")
    return Graph(r, [(u, v) for u in range(r) for v in range(u + 1, r)])


def complete_bipartite(r1: int, r2: int) -> Graph:
    _require(r1, 1, "complete bipartite graph")
    _require(r2, 1, "complete bipartite graph")
    return Graph(r1 + r2, [(u, r1 + v) for u in range(r1) for v in range(r2)])


def path(r: int) -> Graph:
    _require(r, 1, "path")
    return Graph(r, [(i, i + 1) for i in range(r - 1)])


def cycle(r: int) -> Graph:
    _require(r, 3, "cycle")
    return Graph(r, [(i, (i + 1) % r) for i in range(r)])


def wheel(r: int) -> Graph:
    """The r-wheel: rim ``0..r-1`` is ``cycle(r)`` and ``r`` is the central vertex."""
    _require(r, 3, "wheel")
    return Graph(r + 1, [(i, (i + 1) % r) for i in range(r)] + [(i, r) for i in range(r)])


def diamond() -> Graph:
    """K4 minus the edge {2, 3}; vertices 0 and 1 have degree 3."""
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def butterfly() -> Graph:
    """Two triangles sharing vertex 0."""
    return Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def prism() -> Graph:
    """Triangles 0-1-2 and 3-4-5 joined by the matching i -- i+3."""
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
