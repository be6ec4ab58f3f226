from .dataclasses import (
    AxiomViolation,
    Coloring,
    ColoringCount,
    ColoringViolation,
    ConstituentEntry,
    ConstituentReport,
    FoxResult,
    ValidationReport,
    Violation,
)
from .diagram import Arc, Diagram, Edge, Node, NodeKind, Slot

__all__ = [
    "AxiomViolation",
    "Coloring",
    "ColoringCount",
    "ColoringViolation",
    "ConstituentEntry",
    "ConstituentReport",
    "FoxResult",
    "ValidationReport",
    "Violation",
    "Arc",
    "Diagram",
    "Edge",
    "Node",
    "NodeKind",
    "Slot",
]
