"""Membership tests for pseudoforests, apex-pseudoforests and generic k-apex classes."""

from collections.abc import Sequence
from functools import partial
from itertools import combinations
from typing import Callable, Optional

from pydantic import BaseModel, ConfigDict

from .graph import Graph, iter_bits, popcount
from .minors import contains_any_minor


class ClassPredicate(BaseModel):
    """A named graph class; ``is_minor_closed`` is asserted by whoever builds it."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    test: Callable[[Graph], bool]
    is_minor_closed: bool = False

    def __call__(self, graph: Graph) -> bool:
        return self.test(graph)


def is_pseudoforest(graph: Graph) -> bool:
    """Every component has at most as many edges as vertices."""
    return all(
        graph.component_edge_count(mask) <= popcount(mask) for mask in graph.component_masks()
    )


def find_apex(graph: Graph) -> Optional[int]:
    """Smallest vertex whose deletion leaves a pseudoforest, if any."""
    if graph.vertex_count == 0:
        return None
    excess = [m for m in graph.component_masks() if graph.component_edge_count(m) > popcount(m)]
    if len(excess) > 1:
        return None
    candidates = iter_bits(excess[0]) if excess else iter(graph.vertices())
    for v in candidates:
        if is_pseudoforest(graph.delete_vertex(v)):
            return v
    return None


def is_apex_pseudoforest(graph: Graph) -> bool:
    return graph.vertex_count == 0 or find_apex(graph) is not None


def find_deletion_set(graph: Graph, base: ClassPredicate, k: int) -> Optional[tuple[int, ...]]:
    """Smallest (then lexicographically first) vertex set of size <= k deleting into ``base``."""
    for size in range(min(k, graph.vertex_count) + 1):
        for subset in combinations(graph.vertices(), size):
            if base.test(graph.delete_vertices(subset)):
                return subset
    return None


def is_k_apex(graph: Graph, base: ClassPredicate, k: int) -> bool:
    return find_deletion_set(graph, base, k) is not None


def _always(graph: Graph) -> bool:
    return True


def _excludes(graph: Graph, patterns: tuple[Graph, ...]) -> bool:
    return contains_any_minor(graph, list(patterns)) is None


def k_apex_class(base: ClassPredicate, k: int) -> ClassPredicate:
    if k == 0:
        return base
    return ClassPredicate(
        name=f"{k}-apex({base.name})",
        test=partial(is_k_apex, base=base, k=k),
        is_minor_closed=base.is_minor_closed,
    )


def excluded_minor_class(patterns: Sequence[Graph], name: Optional[str] = None) -> ClassPredicate:
    """Graphs with none of ``patterns`` as a minor; minor-closed by construction."""
    return ClassPredicate(
        name=name or f"excl({len(patterns)} patterns)",
        test=partial(_excludes, patterns=tuple(patterns)),
        is_minor_closed=True,
    )


PSEUDOFORESTS = ClassPredicate(name="pseudoforest", test=is_pseudoforest, is_minor_closed=True)
APEX_PSEUDOFORESTS = ClassPredicate(
    name="apex-pseudoforest", test=is_apex_pseudoforest, is_minor_closed=True
)
ALL_GRAPHS = ClassPredicate(name="all-graphs", test=_always, is_minor_closed=True)

_REGISTRY = {cls.name: cls for cls in (PSEUDOFORESTS, APEX_PSEUDOFORESTS, ALL_GRAPHS)}


def class_names() -> list[str]:
    return list(_REGISTRY)


def class_by_name(name: str) -> ClassPredicate:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown graph class {name!r}; expected one of {class_names()}") from None
