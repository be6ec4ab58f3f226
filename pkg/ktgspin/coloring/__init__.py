from .fox import find_fox_coloring, fox_colorings, fox_matrix, invariant_factors
from .lift import complement_of_cut, lift_fox_to_spin
from .solver import (
    ColoringSolver,
    check_coloring,
    enumerate_colorings,
    first_coloring,
    is_trivial_coloring,
)

__all__ = [
    "find_fox_coloring",
    "fox_colorings",
    "fox_matrix",
    "invariant_factors",
    "complement_of_cut",
    "lift_fox_to_spin",
    "ColoringSolver",
    "check_coloring",
    "enumerate_colorings",
    "first_coloring",
    "is_trivial_coloring",
]
