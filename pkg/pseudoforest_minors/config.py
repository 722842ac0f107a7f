"""Configuration models for enumeration, obstruction search and catalog verification."""

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

ClassName = Literal["pseudoforest", "apex-pseudoforest", "all-graphs"]


class EnumerationConfig(BaseModel):
    """Worker and batching settings shared by every exhaustive run."""

    jobs: int = Field(default=1, ge=1, description="Number of worker processes")
    batch_size: int = Field(
        default=1000, ge=1, description="Graphs per worker batch (graph6 strings)"
    )
    allow_n10: bool = Field(
        default=False, description="Permit enumeration of the 10-vertex level"
    )
    progress: bool = Field(default=False, description="Show a progress bar per level")


class SearchConfig(EnumerationConfig):
    """Configuration for an exhaustive obstruction search."""

    class_name: ClassName = Field(
        default="apex-pseudoforest", description="Minor-closed class to search obstructions of"
    )
    max_n: int = Field(default=6, ge=1, le=10, description="Largest vertex count searched")
    connected_only: bool = Field(default=False, description="Search connected graphs only")
    prune: bool = Field(
        default=False,
        description="Skip graphs with a vertex of degree < 2 or a bridge (connected searches only)",
    )

    @model_validator(mode="after")
    def _check_n10(self) -> "SearchConfig":
        if self.max_n == 10 and not self.allow_n10:
            raise ValueError("max_n = 10 requires allow_n10")
        return self


class VerifyConfig(EnumerationConfig):
    """Configuration for the catalog verification run."""

    equivalence_n: int = Field(
        default=6, ge=1, le=9, description="Largest vertex count of the equivalence check"
    )
    search_n: Optional[int] = Field(
        default=None, ge=1, le=10, description="Run the obstruction search comparison up to this n"
    )
    structural_n: Optional[int] = Field(
        default=None, ge=1, le=8, description="Run the structural propositions up to this n"
    )
    prune: bool = Field(default=False, description="Prune the connected obstruction search")

    @model_validator(mode="after")
    def _check_n10(self) -> "VerifyConfig":
        if self.search_n == 10 and not self.allow_n10:
            raise ValueError("search_n = 10 requires allow_n10")
        return self
