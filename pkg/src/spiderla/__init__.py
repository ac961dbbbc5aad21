"""Local antimagic labelings of spider graphs.

Constructions with self-verifying certificates, an independent verifier,
proved bounds, and an exhaustive exact solver for small instances.
"""

from .core import (
    CORE,
    EdgeLabeling,
    InducedColoring,
    SpiderGraph,
    SpiderSignature,
    build_spider,
    canonical_signature,
    format_signature,
    induced_colors,
    parse_signature,
    signature,
)
from .verifier import VerificationReport, Violation, verify, verify_certificate

__all__ = [
    "CORE",
    "EdgeLabeling",
    "InducedColoring",
    "SpiderGraph",
    "SpiderSignature",
    "VerificationReport",
    "Violation",
    "build_spider",
    "canonical_signature",
    "format_signature",
    "induced_colors",
    "parse_signature",
    "signature",
    "verify",
    "verify_certificate",
]
