"""Minor and topological-minor containment with witnesses, and one-step minors."""

import logging
from collections.abc import Iterator, Sequence
from typing import TYPE_CHECKING, Optional

from .canon import canonical_form
from .errors import EmbeddingError, NotMinorClosedError
from .graph import Graph, iter_bits, mask_of, popcount
from .models import MinorEmbedding, RoutedPath, TopologicalEmbedding

if TYPE_CHECKING:
    from .recognition import ClassPredicate

logger = logging.getLogger(__name__)

DEGREE_CAP = 3


# -- fail-fast filters ------------------------------------------------------


def _capped_degree_counts(graph: Graph) -> list[int]:
    degrees = graph.degrees()
    return [sum(1 for d in degrees if d >= t) for t in range(1, DEGREE_CAP + 1)]


def _largest_component(graph: Graph) -> int:
    return max((popcount(mask) for mask in graph.component_masks()), default=0)


def could_contain_minor(host: Graph, pattern: Graph) -> bool:
    """Necessary conditions for ``pattern <= host``; every test is minor-monotone."""
    if pattern.vertex_count > host.vertex_count or pattern.edge_count > host.edge_count:
        return False
    if any(p > h for p, h in zip(_capped_degree_counts(pattern), _capped_degree_counts(host))):
        return False
    if pattern.cycle_rank > host.cycle_rank:
        return False
    return _largest_component(pattern) <= _largest_component(host)


# -- branch-set search --------------------------------------------------------


def _pattern_order(pattern: Graph) -> list[int]:
    """Components by size (largest first); inside one, most already-placed neighbours next."""
    components = sorted(pattern.component_masks(), key=lambda m: (-popcount(m), m))
    degrees = pattern.degrees()
    order: list[int] = []
    for comp in components:
        placed = 0
        first = min(iter_bits(comp), key=lambda v: (-degrees[v], v))
        order.append(first)
        placed |= 1 << first
        remaining = comp & ~placed
        while remaining:
            v = min(
                iter_bits(remaining),
                key=lambda u: (-popcount(pattern.rows[u] & placed), -degrees[u], u),
            )
            order.append(v)
            placed |= 1 << v
            remaining &= ~(1 << v)
    return order


def _connected_sets(rows: Sequence[int], root: int, allowed: int, max_size: int) -> Iterator[int]:
    """Connected subsets of ``allowed`` containing ``root``, each exactly once."""

    def extend(subset: int, size: int, extension: int, forbidden: int) -> Iterator[int]:
        yield subset
        if size == max_size:
            return
        skipped = 0
        candidates = extension
        while candidates:
            low = candidates & -candidates
            candidates ^= low
            v = low.bit_length() - 1
            grown = subset | low
            blocked = forbidden | skipped
            new_extension = (candidates | rows[v]) & allowed & ~grown & ~blocked
            yield from extend(grown, size + 1, new_extension, blocked)
            skipped |= low

    if max_size < 1 or not (allowed >> root) & 1:
        return
    start = 1 << root
    yield from extend(start, 1, rows[root] & allowed & ~start, 0)


def _neighborhood(rows: Sequence[int], mask: int) -> int:
    reach = 0
    for v in iter_bits(mask):
        reach |= rows[v]
    return reach & ~mask


class _MinorSearch:
    def __init__(self, host: Graph, pattern: Graph):
        self.rows = host.rows
        self.pattern = pattern
        self.order = _pattern_order(pattern)
        self.position = {v: i for i, v in enumerate(self.order)}
        self.sets: dict[int, int] = {}
        self.nodes = 0

    def _unplaced_neighbors(self, a: int, placed: int) -> int:
        return popcount(self.pattern.rows[a] & ~placed)

    def run(self, free: int) -> bool:
        return self._place(0, free, 0)

    def _candidates(self, a: int, free: int, placed: int, max_size: int) -> list[int]:
        placed_nbrs = list(iter_bits(self.pattern.rows[a] & placed))
        if placed_nbrs:
            anchors = _neighborhood(self.rows, self.sets[placed_nbrs[0]]) & free
        else:
            anchors = free
        found = []
        earlier = 0
        for x in iter_bits(anchors):
            for subset in _connected_sets(self.rows, x, free & ~earlier, max_size):
                touch = _neighborhood(self.rows, subset)
                if all(touch & self.sets[b] for b in placed_nbrs):
                    found.append(subset)
            earlier |= 1 << x
        found.sort(key=lambda m: (popcount(m), m))
        return found

    def _place(self, i: int, free: int, placed: int) -> bool:
        if i == len(self.order):
            return True
        self.nodes += 1
        a = self.order[i]
        remaining = len(self.order) - i - 1
        max_size = popcount(free) - remaining
        now_placed = placed | (1 << a)
        for subset in self._candidates(a, free, placed, max_size):
            left = free & ~subset
            self.sets[a] = subset
            if self._feasible(now_placed, left) and self._place(i + 1, left, now_placed):
                return True
            del self.sets[a]
        return False

    def _feasible(self, placed: int, free: int) -> bool:
        for c in iter_bits(placed):
            need = self._unplaced_neighbors(c, placed)
            if need and popcount(_neighborhood(self.rows, self.sets[c]) & free) < need:
                return False
        return True


def validate_embedding(host: Graph, pattern: Graph, embedding: MinorEmbedding) -> None:
    """Raise EmbeddingError unless ``embedding`` models ``pattern`` inside ``host``."""
    sets = embedding.branch_sets
    if sorted(sets) != list(pattern.vertices()):
        raise EmbeddingError("branch sets do not cover the pattern vertices")
    used = 0
    masks = {}
    for a, vertices in sets.items():
        if not vertices:
            raise EmbeddingError(f"empty branch set for pattern vertex {a}")
        if any(not 0 <= v < host.vertex_count for v in vertices):
            raise EmbeddingError(f"branch set {a} leaves the host")
        mask = mask_of(vertices)
        if mask & used:
            raise EmbeddingError(f"branch set {a} overlaps another")
        if host.reach(mask & -mask, mask) != mask:
            raise EmbeddingError(f"branch set {a} is not connected")
        used |= mask
        masks[a] = mask
    for a, b in pattern.edges():
        if not _neighborhood(host.rows, masks[a]) & masks[b]:
            raise EmbeddingError(f"no host edge between branch sets {a} and {b}")


def contains_minor(host: Graph, pattern: Graph) -> Optional[MinorEmbedding]:
    if pattern.vertex_count == 0:
        return MinorEmbedding(branch_sets={})
    if not could_contain_minor(host, pattern):
        return None
    search = _MinorSearch(host, pattern)
    if not search.run(host.vertex_mask):
        logger.debug(f"No minor after {search.nodes} search nodes")
        return None
    embedding = MinorEmbedding(
        branch_sets={a: tuple(iter_bits(search.sets[a])) for a in sorted(search.sets)}
    )
    validate_embedding(host, pattern, embedding)
    return embedding


def contains_any_minor(
    host: Graph, patterns: Sequence[Graph]
) -> Optional[tuple[int, MinorEmbedding]]:
    """First pattern (smallest first, then by position) that is a minor of ``host``."""
    ranked = sorted(
        range(len(patterns)),
        key=lambda i: (patterns[i].vertex_count, patterns[i].edge_count, i),
    )
    for index in ranked:
        embedding = contains_minor(host, patterns[index])
        if embedding is not None:
            return index, embedding
    return None


# -- topological minors -------------------------------------------------------


def _simple_paths(
    rows: Sequence[int], source: int, target: int, allowed: int
) -> Iterator[list[int]]:
    """Paths source..target whose interior lies in ``allowed``."""
    path = [source]

    def walk(v: int, visited: int) -> Iterator[list[int]]:
        if (rows[v] >> target) & 1:
            yield path + [target]
        for w in iter_bits(rows[v] & allowed & ~visited):
            path.append(w)
            yield from walk(w, visited | (1 << w))
            path.pop()

    yield from walk(source, (1 << source) | (1 << target))


class _TopologicalSearch:
    def __init__(self, host: Graph, pattern: Graph):
        self.host = host
        self.rows = host.rows
        self.pattern = pattern
        self.order = _pattern_order(pattern)
        self.host_degrees = host.degrees()
        self.branch: dict[int, int] = {}
        self.paths: dict[tuple[int, int], list[int]] = {}

    def run(self) -> bool:
        return self._assign(0, 0)

    def _assign(self, i: int, used: int) -> bool:
        if i == len(self.order):
            return True
        a = self.order[i]
        need = self.pattern.degree(a)
        placed = [b for b in self.order[:i] if self.pattern.has_edge(a, b)]
        for x in range(self.host.vertex_count):
            if (used >> x) & 1 or self.host_degrees[x] < need:
                continue
            self.branch[a] = x
            if self._route(i, a, placed, 0, used | (1 << x)):
                return True
            del self.branch[a]
        return False

    def _route(self, i: int, a: int, placed: list[int], k: int, used: int) -> bool:
        if k == len(placed):
            return self._assign(i + 1, used)
        b = placed[k]
        edge = (min(a, b), max(a, b))
        free = self.host.vertex_mask & ~used
        for route in _simple_paths(self.rows, self.branch[a], self.branch[b], free):
            self.paths[edge] = list(route)
            interior = mask_of(route[1:-1])
            if self._route(i, a, placed, k + 1, used | interior):
                return True
            del self.paths[edge]
        return False


def validate_topological_embedding(
    host: Graph, pattern: Graph, embedding: TopologicalEmbedding
) -> None:
    branch = embedding.branch_vertices
    if sorted(branch) != list(pattern.vertices()):
        raise EmbeddingError("branch vertices do not cover the pattern vertices")
    if len(set(branch.values())) != len(branch):
        raise EmbeddingError("branch vertices are not distinct")
    routed = {tuple(sorted(p.pattern_edge)): p.vertices for p in embedding.paths}
    if sorted(routed) != pattern.edges() or len(embedding.paths) != pattern.edge_count:
        raise EmbeddingError("paths do not match the pattern edges one to one")
    taken = set(branch.values())
    for (a, b), vertices in routed.items():
        ends = {vertices[0], vertices[-1]}
        if ends != {branch[a], branch[b]} or len(vertices) < 2:
            raise EmbeddingError(f"path for ({a}, {b}) has wrong endpoints")
        if len(set(vertices)) != len(vertices):
            raise EmbeddingError(f"path for ({a}, {b}) repeats a vertex")
        for u, v in zip(vertices, vertices[1:]):
            if not host.has_edge(u, v):
                raise EmbeddingError(f"path for ({a}, {b}) uses missing host edge ({u}, {v})")
        interior = set(vertices[1:-1])
        if interior & taken:
            raise EmbeddingError(f"path for ({a}, {b}) meets another path or branch vertex")
        taken |= interior


def contains_topological_minor(host: Graph, pattern: Graph) -> Optional[TopologicalEmbedding]:
    """A subdivision of ``pattern`` inside ``host``, intended for small patterns."""
    if pattern.vertex_count > host.vertex_count or pattern.edge_count > host.edge_count:
        return None
    if any(p > h for p, h in zip(pattern.degree_sequence(), host.degree_sequence())):
        return None
    search = _TopologicalSearch(host, pattern)
    if not search.run():
        return None
    embedding = TopologicalEmbedding(
        branch_vertices={a: search.branch[a] for a in sorted(search.branch)},
        paths=[
            RoutedPath(pattern_edge=edge, vertices=tuple(search.paths[edge]))
            for edge in sorted(search.paths)
        ],
    )
    validate_topological_embedding(host, pattern, embedding)
    return embedding


# -- one-step minors and obstructions ----------------------------------------


def one_step_minor_graphs(graph: Graph) -> Iterator[Graph]:
    """G minus e and G contract e for every edge, then G minus v for every isolated v."""
    for u, v in graph.edges():
        yield graph.delete_edge(u, v)
        yield graph.contract_edge(u, v)
    for v, row in enumerate(graph.rows):
        if not row:
            yield graph.delete_vertex(v)


def one_step_minors(graph: Graph) -> set[str]:
    return {canonical_form(minor) for minor in one_step_minor_graphs(graph)}


def _require_minor_closed(cls: "ClassPredicate") -> None:
    if not cls.is_minor_closed:
        raise NotMinorClosedError(f"class {cls.name!r} is not flagged minor-closed")


def is_obstruction(graph: Graph, cls: "ClassPredicate") -> bool:
    """Outside ``cls`` while every one-step minor is inside it."""
    _require_minor_closed(cls)
    if cls.test(graph):
        return False
    return all(cls.test(minor) for minor in one_step_minor_graphs(graph))


def is_minimal_two_step(graph: Graph, cls: "ClassPredicate") -> bool:
    """Slow path of ``is_obstruction``: also inspects every minor two steps down."""
    _require_minor_closed(cls)
    if cls.test(graph):
        return False
    for minor in one_step_minor_graphs(graph):
        if not cls.test(minor):
            return False
        if not all(cls.test(deeper) for deeper in one_step_minor_graphs(minor)):
            return False
    return True
