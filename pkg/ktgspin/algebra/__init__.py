from .gfamily import (
    AssociatedQuandle,
    GFamily,
    associated_quandle,
    conjugation_gfamily,
    dihedral_gfamily,
    trivial_gfamily,
    verify_gfamily,
)
from .group import FiniteGroup, cyclic_group, symmetric_group, verify_group
from .quandle import FiniteQuandle, dihedral_quandle, op_inverse, trivial_quandle, verify_quandle

__all__ = [
    "AssociatedQuandle",
    "GFamily",
    "associated_quandle",
    "conjugation_gfamily",
    "dihedral_gfamily",
    "trivial_gfamily",
    "verify_gfamily",
    "FiniteGroup",
    "cyclic_group",
    "symmetric_group",
    "verify_group",
    "FiniteQuandle",
    "dihedral_quandle",
    "op_inverse",
    "trivial_quandle",
    "verify_quandle",
]
