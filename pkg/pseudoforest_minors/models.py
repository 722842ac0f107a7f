"""Data models for witnesses, decompositions, certificates, reports and the catalog."""

from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from .codec import encode_graph6
from .errors import UnknownCatalogEntryError
from .graph import Graph


class MinorEmbedding(BaseModel):
    """Branch-set model of a minor: pattern vertex -> host vertices."""

    model_config = ConfigDict(frozen=True)

    branch_sets: dict[int, tuple[int, ...]]


class RoutedPath(BaseModel):
    """Host path realising one pattern edge, endpoints included."""

    model_config = ConfigDict(frozen=True)

    pattern_edge: tuple[int, int]
    vertices: tuple[int, ...]


class TopologicalEmbedding(BaseModel):
    """Subdivision witness: branch vertices plus one routed path per pattern edge."""

    model_config = ConfigDict(frozen=True)

    branch_vertices: dict[int, int]
    paths: list[RoutedPath]


class SeparatorTrace(BaseModel):
    """One node of the splitting recursion; a leaf (no separator) is a member."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    graph: Graph
    separator: Optional[tuple[int, ...]] = None
    children: list["SeparatorTrace"] = Field(default_factory=list)

    @field_serializer("graph")
    def _graph_to_g6(self, graph: Graph) -> str:
        return encode_graph6(graph)

    def leaves(self) -> list[Graph]:
        if self.separator is None:
            return [self.graph]
        return [leaf for child in self.children for leaf in child.leaves()]


class TriconnectedDecomposition(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    members: list[Graph]
    trace: SeparatorTrace

    @field_serializer("members")
    def _members_to_g6(self, members: list[Graph]) -> list[str]:
        return [encode_graph6(member) for member in members]


class EdgeAddition(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["add"] = "add"
    edge: tuple[int, int]


class VertexSplit(BaseModel):
    """Split ``vertex`` into itself (keeping ``side_a``) and a new last vertex (``side_b``)."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["split"] = "split"
    vertex: int
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]


WheelStep = Annotated[Union[EdgeAddition, VertexSplit], Field(discriminator="kind")]


class WheelCertificate(BaseModel):
    """Growth sequence from ``wheel(base_r)`` to a graph isomorphic to the certified one."""

    model_config = ConfigDict(frozen=True)

    base_r: int
    steps: list[WheelStep] = Field(default_factory=list)


class CheckResult(BaseModel):
    """Outcome of one named check."""

    name: str
    passed: bool
    counterexamples: list[str] = Field(default_factory=list)
    details: list[str] = Field(default_factory=list)
    elapsed: float = 0.0


class VerificationReport(BaseModel):
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failed(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def get(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def to_lines(self) -> str:
        """Machine-readable ``CHECK <name> PASS|FAIL [g6...]`` lines."""
        lines = []
        for check in self.checks:
            verdict = "PASS" if check.passed else "FAIL"
            lines.append(" ".join(["CHECK", check.name, verdict, *check.counterexamples]))
        return "\n".join(lines) + ("\n" if lines else "")

    def to_text(self) -> str:
        lines = []
        for check in self.checks:
            verdict = "PASS" if check.passed else "FAIL"
            lines.append(f"[{verdict}] {check.name} ({check.elapsed:.2f}s)")
            for detail in check.details:
                lines.append(f"    {detail}")
            for g6 in check.counterexamples:
                lines.append(f"    counterexample {g6}")
        total = len(self.checks)
        lines.append(f"{total - len(self.failed())}/{total} checks passed")
        return "\n".join(lines) + "\n"


class EnumerationLevel(BaseModel):
    """Canonical forms of all (or all connected) graphs on ``n`` vertices."""

    model_config = ConfigDict(frozen=True)

    n: int
    connected_only: bool
    forms: tuple[str, ...]


class CatalogEntry(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    connectivity_class: int
    graph: Graph

    @field_serializer("graph")
    def _graph_to_g6(self, graph: Graph) -> str:
        return encode_graph6(graph)


class ObstructionCatalog(BaseModel):
    """Ordered catalog entries; a value, so edits return a new catalog."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    entries: tuple[CatalogEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def names(self) -> list[str]:
        return [entry.name for entry in self.entries]

    def graphs(self) -> list[Graph]:
        return [entry.graph for entry in self.entries]

    def by_class(self, connectivity_class: int) -> list[CatalogEntry]:
        return [e for e in self.entries if e.connectivity_class == connectivity_class]

    def get(self, name: str) -> CatalogEntry:
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise UnknownCatalogEntryError(f"unknown catalog entry {name!r}")

    def without(self, name: str) -> "ObstructionCatalog":
        self.get(name)
        return ObstructionCatalog(entries=tuple(e for e in self.entries if e.name != name))

    def replace(self, name: str, graph: Graph) -> "ObstructionCatalog":
        self.get(name)
        return ObstructionCatalog(
            entries=tuple(
                CatalogEntry(name=e.name, connectivity_class=e.connectivity_class, graph=graph)
                if e.name == name
                else e
                for e in self.entries
            )
        )


SeparatorTrace.model_rebuild()
