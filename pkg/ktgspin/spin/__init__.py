from .classifier import (
    KnottedWitness,
    SpinCertificate,
    SpinDiagnostics,
    UnknottedWitness,
    classify_spin,
)
from .constituents import (
    AlmostTrivialReport,
    SubgraphCheck,
    almost_trivial_check,
    closed_proper_subgraphs,
    is_theta,
    spin_constituents,
)
from .survey import all_spins

__all__ = [
    "KnottedWitness",
    "SpinCertificate",
    "SpinDiagnostics",
    "UnknottedWitness",
    "classify_spin",
    "AlmostTrivialReport",
    "SubgraphCheck",
    "almost_trivial_check",
    "closed_proper_subgraphs",
    "is_theta",
    "spin_constituents",
    "all_spins",
]
