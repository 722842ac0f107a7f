"""Pseudoforest and apex-pseudoforest minor toolkit."""

__version__ = "0.1.0"

from .catalog import build_catalog, export_catalog, lookup
from .config import EnumerationConfig, SearchConfig, VerifyConfig
from .graph import Graph
from .models import (
    MinorEmbedding,
    ObstructionCatalog,
    TriconnectedDecomposition,
    VerificationReport,
    WheelCertificate,
)
from .recognition import APEX_PSEUDOFORESTS, PSEUDOFORESTS, is_apex_pseudoforest, is_pseudoforest
from .verify import CatalogVerifier, verify_catalog

__all__ = [
    "APEX_PSEUDOFORESTS",
    "CatalogVerifier",
    "EnumerationConfig",
    "Graph",
    "MinorEmbedding",
    "ObstructionCatalog",
    "PSEUDOFORESTS",
    "SearchConfig",
    "TriconnectedDecomposition",
    "VerificationReport",
    "VerifyConfig",
    "WheelCertificate",
    "build_catalog",
    "export_catalog",
    "is_apex_pseudoforest",
    "is_pseudoforest",
    "lookup",
    "verify_catalog",
]
