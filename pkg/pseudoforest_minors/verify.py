"""Obstruction search and verification of the obstruction catalog."""

import logging
import time
from collections.abc import Iterable, Sequence
from itertools import combinations, product
from typing import Callable, Optional, Union

from .canon import canonical_form, isomorphic
from .catalog import CATALOG_SIZE, CLASS_SIZES, build_catalog
from .codec import decode_graph6, encode_graph6
from .config import EnumerationConfig, VerifyConfig
from .decomposition import (
    blocks,
    cut_vertices,
    hamiltonian_cycle,
    is_triconnected,
    is_wheel,
    member_forms,
    replay_certificate,
    triconnected_components,
    vertex_connectivity,
    wheel_certificate,
)
from .enumeration import batched, enumerate_level, graphs_up_to, parallel_map
from .errors import EnumerationLimitError, NotMinorClosedError
from .graph import Graph, butterfly, complete, complete_bipartite, diamond, disjoint_union
from .minors import (
    contains_any_minor,
    contains_minor,
    contains_topological_minor,
    is_minimal_two_step,
    is_obstruction,
)
from .models import CheckResult, ObstructionCatalog, VerificationReport
from .recognition import (
    APEX_PSEUDOFORESTS,
    ClassPredicate,
    excluded_minor_class,
    k_apex_class,
)

logger = logging.getLogger(__name__)

MAX_EQUIVALENCE_N = 9


def pseudoforest_obstructions() -> list[Graph]:
    """The diamond and the butterfly."""
    return [diamond(), butterfly()]


def _timed(name: str, check: Callable[[], tuple[bool, list[str], list[str]]]) -> CheckResult:
    start = time.perf_counter()
    passed, counterexamples, details = check()
    result = CheckResult(
        name=name,
        passed=passed,
        counterexamples=counterexamples,
        details=details,
        elapsed=time.perf_counter() - start,
    )
    logger.info(f"CHECK {name}: {'PASS' if passed else 'FAIL'} ({result.elapsed:.2f}s)")
    return result


# -- obstruction search --------------------------------------------------------


def _obstruction_batch(task: tuple[ClassPredicate, list[str], bool]) -> list[str]:
    cls, forms, prune = task
    found = []
    for g6 in forms:
        graph = decode_graph6(g6)
        if prune and (graph.min_degree() < 2 or graph.bridges()):
            continue
        if is_obstruction(graph, cls):
            found.append(canonical_form(graph))
    return found


def search_obstructions(
    cls: ClassPredicate,
    max_n: int,
    connected_only: bool = False,
    prune: bool = False,
    config: Optional[EnumerationConfig] = None,
    source: Optional[Iterable[Graph]] = None,
) -> set[str]:
    """Canonical forms of every obstruction of ``cls`` on at most ``max_n`` vertices.

    ``prune`` drops graphs with a vertex of degree < 2 or a bridge, and only
    applies to connected searches. ``source`` replaces the built-in enumeration.
    """
    config = config or EnumerationConfig()
    if not cls.is_minor_closed:
        raise NotMinorClosedError(f"class {cls.name!r} is not flagged minor-closed")
    prune = prune and connected_only
    if source is None:
        forms = [
            g6
            for n in range(1, max_n + 1)
            for g6 in enumerate_level(n, connected_only, config).forms
        ]
    else:
        forms = [
            encode_graph6(graph)
            for graph in source
            if graph.vertex_count <= max_n and (not connected_only or graph.is_connected())
        ]
    logger.info(f"Starting obstruction search for {cls.name} over {len(forms)} graphs")
    tasks = [(cls, batch, prune) for batch in batched(forms, config.batch_size)]
    found: set[str] = set()
    for batch_found in parallel_map(_obstruction_batch, tasks, config, "search"):
        found.update(batch_found)
    logger.info(f"Found {len(found)} obstructions for {cls.name} with n <= {max_n}")
    return found


def _compositions(total: int) -> list[tuple[int, ...]]:
    """Non-increasing splits of ``total`` into at least two positive parts."""
    result = []

    def split(remaining: int, largest: int, parts: tuple[int, ...]) -> None:
        if remaining == 0:
            if len(parts) >= 2:
                result.append(parts)
            return
        for part in range(min(remaining, largest), 0, -1):
            split(remaining - part, part, parts + (part,))

    split(total, total, ())
    return result


def compose_disconnected(
    base_obs: Sequence[Graph],
    k: int,
    hierarchy: Optional[Sequence[Sequence[Graph]]] = None,
) -> set[str]:
    """Disconnected obstruction candidates for the k-apex class over excl(base_obs).

    A part of weight k_i draws its component from ``hierarchy[k_i - 1]``, the
    obstructions of the (k_i - 1)-apex class; weights sum to k + 1. Every union
    is re-tested with ``is_obstruction``.
    """
    if not base_obs:
        return set()
    levels = list(hierarchy) if hierarchy is not None else [list(base_obs)]
    if k > len(levels):
        raise ValueError(f"composition for k={k} needs {k} hierarchy levels, got {len(levels)}")
    target = k_apex_class(excluded_minor_class(base_obs, name="base"), k)
    candidates: dict[str, Graph] = {}
    for parts in _compositions(k + 1):
        for chosen in product(*(levels[part - 1] for part in parts)):
            union = chosen[0]
            for component in chosen[1:]:
                union = disjoint_union(union, component)
            candidates.setdefault(canonical_form(union), union)
    found = {form for form, union in candidates.items() if is_obstruction(union, target)}
    logger.info(
        f"Composed {len(candidates)} disconnected candidates, {len(found)} are obstructions"
    )
    return found


# -- equivalence -----------------------------------------------------------------


def _equivalence_batch(task: tuple[tuple[Graph, ...], ClassPredicate, list[str]]) -> list[str]:
    patterns, predicate, forms = task
    violations = []
    for g6 in forms:
        graph = decode_graph6(g6)
        if predicate.test(graph) != (contains_any_minor(graph, patterns) is None):
            violations.append(g6)
    return violations


def equivalence_check(
    catalog: Union[ObstructionCatalog, Sequence[Graph]],
    n_max: int,
    predicate: ClassPredicate = APEX_PSEUDOFORESTS,
    config: Optional[EnumerationConfig] = None,
) -> VerificationReport:
    """Membership agrees with excluding every catalog graph as a minor, for all n <= n_max."""
    if n_max > MAX_EQUIVALENCE_N:
        raise EnumerationLimitError(f"equivalence check supports n <= {MAX_EQUIVALENCE_N}")
    config = config or EnumerationConfig()
    patterns = tuple(catalog.graphs() if isinstance(catalog, ObstructionCatalog) else catalog)

    def check() -> tuple[bool, list[str], list[str]]:
        forms = [g6 for n in range(1, n_max + 1) for g6 in enumerate_level(n, False, config).forms]
        tasks = [(patterns, predicate, batch) for batch in batched(forms, config.batch_size)]
        violations: list[str] = []
        for found in parallel_map(_equivalence_batch, tasks, config, "equivalence"):
            violations.extend(found)
        details = [f"{len(forms)} graphs with n <= {n_max}, {len(violations)} violations"]
        return not violations, violations, details

    return VerificationReport(checks=[_timed("equivalence", check)])


# -- catalog invariants ------------------------------------------------------------


def _count_check(catalog: ObstructionCatalog) -> tuple[bool, list[str], list[str]]:
    details = []
    if len(catalog) != CATALOG_SIZE:
        details.append(f"count mismatch {len(catalog)} != {CATALOG_SIZE}")
    for cls, size in CLASS_SIZES.items():
        actual = len(catalog.by_class(cls))
        if actual != size:
            details.append(f"class {cls} count mismatch {actual} != {size}")
    return not details, [], details


def _per_entry(
    catalog: ObstructionCatalog, bad: Callable[[int, Graph], bool], connected_only: bool = False
) -> tuple[bool, list[str], list[str]]:
    names, forms = [], []
    for entry in catalog.entries:
        if connected_only and not entry.graph.is_connected():
            continue
        if bad(entry.connectivity_class, entry.graph):
            names.append(entry.name)
            forms.append(encode_graph6(entry.graph))
    return not names, forms, names


def _pairwise(
    catalog: ObstructionCatalog, related: Callable[[Graph, Graph], bool], ordered: bool
) -> tuple[bool, list[str], list[str]]:
    pairs = (
        [(a, b) for a in catalog.entries for b in catalog.entries if a is not b]
        if ordered
        else list(combinations(catalog.entries, 2))
    )
    names, forms = [], []
    for a, b in pairs:
        if related(a.graph, b.graph):
            names.append(f"{a.name} ~ {b.name}")
            forms.extend([encode_graph6(a.graph), encode_graph6(b.graph)])
    return not names, forms, names


def _degree_two_simplicial(graph: Graph) -> bool:
    return all(graph.is_simplicial(v) for v in graph.vertices() if graph.degree(v) == 2)


def catalog_checks(catalog: ObstructionCatalog) -> VerificationReport:
    """Count, connectivity class, distinctness, antichain, obstruction and degree invariants."""
    checks = [
        _timed("count", lambda: _count_check(catalog)),
        _timed(
            "connectivity-class",
            lambda: _per_entry(catalog, lambda cls, g: vertex_connectivity(g) != cls),
        ),
        _timed("non-isomorphic", lambda: _pairwise(catalog, isomorphic, ordered=False)),
        _timed(
            "antichain",
            lambda: _pairwise(
                catalog, lambda a, b: contains_minor(b, a) is not None, ordered=True
            ),
        ),
        _timed(
            "obstruction",
            lambda: _per_entry(catalog, lambda _, g: not is_obstruction(g, APEX_PSEUDOFORESTS)),
        ),
        _timed(
            "min-degree",
            lambda: _per_entry(catalog, lambda _, g: g.min_degree() < 2, connected_only=True),
        ),
        _timed(
            "bridgeless",
            lambda: _per_entry(catalog, lambda _, g: bool(g.bridges()), connected_only=True),
        ),
        _timed(
            "degree-2-simplicial",
            lambda: _per_entry(
                catalog, lambda _, g: not _degree_two_simplicial(g), connected_only=True
            ),
        ),
    ]
    return VerificationReport(checks=checks)


def search_report(
    forms: Iterable[str], cls: ClassPredicate = APEX_PSEUDOFORESTS
) -> VerificationReport:
    """Slow-path minimality and antichain checks over a search result."""
    graphs = [decode_graph6(g6) for g6 in sorted(forms)]

    def minimality() -> tuple[bool, list[str], list[str]]:
        bad = [encode_graph6(g) for g in graphs if not is_minimal_two_step(g, cls)]
        return not bad, bad, []

    def antichain() -> tuple[bool, list[str], list[str]]:
        bad = []
        for a, b in combinations(graphs, 2):
            small, large = (a, b) if a.vertex_count <= b.vertex_count else (b, a)
            if contains_minor(large, small) is not None:
                bad.extend([encode_graph6(small), encode_graph6(large)])
        return not bad, bad, []

    return VerificationReport(
        checks=[_timed("search-minimality", minimality), _timed("search-antichain", antichain)]
    )


def search_comparison(
    catalog: ObstructionCatalog,
    search_n: int,
    prune: bool,
    config: EnumerationConfig,
    source: Optional[Sequence[Graph]] = None,
) -> VerificationReport:
    """Connected search plus composed disconnected obstructions against the catalog."""
    found: set[str] = set()

    def compare() -> tuple[bool, list[str], list[str]]:
        found.update(search_obstructions(APEX_PSEUDOFORESTS, search_n, True, prune, config, source))
        found.update(compose_disconnected(pseudoforest_obstructions(), 1))
        expected = {
            canonical_form(e.graph)
            for e in catalog.entries
            if not e.graph.is_connected() or e.graph.vertex_count <= search_n
        }
        extra, missing = sorted(found - expected), sorted(expected - found)
        details = [f"{len(found)} found, {len(extra)} extra, {len(missing)} missing"]
        return not extra and not missing, extra + missing, details

    report = VerificationReport(checks=[_timed("search", compare)])
    report.extend(search_report(found))
    return report


# -- structural propositions --------------------------------------------------------


def _connected_graphs(n_max: int, config: Optional[EnumerationConfig]) -> list[Graph]:
    return list(graphs_up_to(n_max, True, config))


def _biconnected(graph: Graph) -> bool:
    return graph.vertex_count >= 3 and graph.is_connected() and not cut_vertices(graph)


def _counterexamples(
    graphs: Iterable[Graph], holds: Callable[[Graph], bool]
) -> tuple[bool, list[str], list[str]]:
    bad = [encode_graph6(g) for g in graphs if not holds(g)]
    return not bad, bad, []


def check_members_topological(
    n_max: int, config: Optional[EnumerationConfig] = None
) -> CheckResult:
    """Every triconnected component is a topological minor of the graph."""

    def holds(graph: Graph) -> bool:
        members = triconnected_components(graph).members
        return all(contains_topological_minor(graph, m) is not None for m in members)

    return _timed(
        "members-topological", lambda: _counterexamples(_connected_graphs(n_max, config), holds)
    )


def check_k4_criterion(n_max: int, config: Optional[EnumerationConfig] = None) -> CheckResult:
    """K4 is a minor iff some triconnected component is triconnected."""
    k4 = complete(4)

    def holds(graph: Graph) -> bool:
        has_k4 = contains_minor(graph, k4) is not None
        members = triconnected_components(graph).members
        return has_k4 == any(is_triconnected(m) for m in members)

    return _timed(
        "k4-criterion", lambda: _counterexamples(_connected_graphs(n_max, config), holds)
    )


def check_triconnected_obstructions(
    n_max: int, config: Optional[EnumerationConfig] = None
) -> CheckResult:
    """Triconnected non-wheels contain a 3-connected catalog graph as a minor."""
    patterns = [entry.graph for entry in build_catalog().by_class(3)]

    def holds(graph: Graph) -> bool:
        if not is_triconnected(graph) or is_wheel(graph) is not None:
            return True
        return contains_any_minor(graph, patterns) is not None

    return _timed(
        "triconnected-obstruction",
        lambda: _counterexamples(_connected_graphs(n_max, config), holds),
    )


def check_degree_two_pair(n_max: int, config: Optional[EnumerationConfig] = None) -> CheckResult:
    """Biconnected K4-minor-free graphs have at least two vertices of degree 2."""
    k4 = complete(4)

    def holds(graph: Graph) -> bool:
        if not _biconnected(graph) or contains_minor(graph, k4) is not None:
            return True
        return sum(1 for d in graph.degrees() if d == 2) >= 2

    return _timed(
        "degree-2-pair", lambda: _counterexamples(_connected_graphs(n_max, config), holds)
    )


def check_outerplanar_hamiltonian(
    n_max: int, config: Optional[EnumerationConfig] = None
) -> CheckResult:
    """Biconnected graphs without K4 and K_{2,3} minors are Hamiltonian."""
    excluded = [complete(4), complete_bipartite(2, 3)]

    def holds(graph: Graph) -> bool:
        if not _biconnected(graph) or contains_any_minor(graph, excluded) is not None:
            return True
        return hamiltonian_cycle(graph) is not None

    return _timed(
        "outerplanar-hamiltonian", lambda: _counterexamples(_connected_graphs(n_max, config), holds)
    )


def check_certificates(n_max: int, config: Optional[EnumerationConfig] = None) -> CheckResult:
    """Certificates exist exactly for triconnected graphs and replay to the input."""

    def holds(graph: Graph) -> bool:
        certificate = wheel_certificate(graph)
        if not is_triconnected(graph):
            return certificate is None
        return certificate is not None and isomorphic(replay_certificate(certificate), graph)

    def every_graph() -> list[Graph]:
        return list(graphs_up_to(n_max, False, config))

    return _timed("wheel-certificates", lambda: _counterexamples(every_graph(), holds))


def check_choice_invariance(n_max: int, config: Optional[EnumerationConfig] = None) -> CheckResult:
    """Triconnected components do not depend on which minimum separator is split first."""

    def holds(graph: Graph) -> bool:
        first = member_forms(triconnected_components(graph, prefer="first"))
        return first == member_forms(triconnected_components(graph, prefer="last"))

    return _timed(
        "choice-invariance", lambda: _counterexamples(_connected_graphs(n_max, config), holds)
    )


def check_blocks(n_max: int, config: Optional[EnumerationConfig] = None) -> CheckResult:
    """Blocks cover every edge exactly once."""

    def holds(graph: Graph) -> bool:
        return sum(block.edge_count for block in blocks(graph)) == graph.edge_count

    return _timed("blocks", lambda: _counterexamples(_connected_graphs(n_max, config), holds))


def structural_report(n_max: int, config: Optional[EnumerationConfig] = None) -> VerificationReport:
    logger.info(f"Starting structural checks over connected graphs with n <= {n_max}")
    checks = [
        check(n_max, config)
        for check in (
            check_blocks,
            check_members_topological,
            check_k4_criterion,
            check_triconnected_obstructions,
            check_degree_two_pair,
            check_outerplanar_hamiltonian,
            check_certificates,
            check_choice_invariance,
        )
    ]
    return VerificationReport(checks=checks)


# -- orchestration -------------------------------------------------------------------


class CatalogVerifier:
    """Runs every catalog check configured by a ``VerifyConfig``."""

    def __init__(
        self,
        config: VerifyConfig,
        catalog: Optional[ObstructionCatalog] = None,
        source: Optional[Sequence[Graph]] = None,
    ):
        self.config = config
        self.source = source
        self.catalog = catalog if catalog is not None else build_catalog()
        logger.info(f"[Config] Verifying {len(self.catalog)} catalog entries")
        logger.info(
            f"[Config] equivalence_n={config.equivalence_n} search_n={config.search_n} "
            f"structural_n={config.structural_n} jobs={config.jobs}"
        )

    @classmethod
    def create(
        cls,
        config_dict: Optional[dict],
        catalog: Optional[ObstructionCatalog] = None,
        source: Optional[Sequence[Graph]] = None,
    ) -> "CatalogVerifier":
        """Factory method building the verifier from a plain dictionary."""
        config = VerifyConfig.model_validate(config_dict or {})
        return cls(config, catalog, source)

    def run(self) -> VerificationReport:
        try:
            logger.info("Starting catalog verification...")
            report = catalog_checks(self.catalog)
            report.extend(
                equivalence_check(self.catalog, self.config.equivalence_n, config=self.config)
            )
            if self.config.search_n is not None:
                report.extend(
                    search_comparison(
                        self.catalog,
                        self.config.search_n,
                        self.config.prune,
                        self.config,
                        self.source,
                    )
                )
            if self.config.structural_n is not None:
                report.extend(structural_report(self.config.structural_n, self.config))
            failed = len(report.failed())
            logger.info(
                f"Catalog verification finished: {len(report.checks) - failed} passed, "
                f"{failed} failed"
            )
            return report
        except Exception as e:
            logger.error(f"Error during catalog verification: {e}", exc_info=True)
            raise


def verify_catalog(
    catalog: Optional[ObstructionCatalog] = None, config: Optional[VerifyConfig] = None
) -> VerificationReport:
    return CatalogVerifier(config or VerifyConfig(), catalog).run()

