"""Exhaustive finite-geometry oracle for small general linear groups.

Everything here is brute force on purpose: table-driven field arithmetic,
flags as canonical echelon bases, and censuses that enumerate every point.
The closed-form counts in `bedard_pieces.counts` were frozen only after
this module reproduced them by raw enumeration.
"""

from .gf import GF, FqField
from .flags import (
    DimensionMismatch,
    PartialFlag,
    Subspace,
    enumerate_flags,
    enumerate_subspaces,
    flag_PQ,
    frobenius_flag,
    full_space,
    intersect,
    pos_flags,
    signature_for_type,
    span,
    sum_spaces,
    type_of_signature,
    weyl_group,
    zero_space,
)
from .lines import (
    SymplecticSpace,
    dl_piece,
    enumerate_lines,
    gl_line_class,
    sp_line_class,
    standard_symplectic,
)
from .zvariety import (
    BudgetExceeded,
    ZCensusResult,
    ZPointFq,
    gl_elements,
    theta,
    z_census,
    z_piece,
    z_points,
)

__all__ = [
    "GF",
    "FqField",
    "DimensionMismatch",
    "PartialFlag",
    "Subspace",
    "enumerate_flags",
    "enumerate_subspaces",
    "flag_PQ",
    "frobenius_flag",
    "full_space",
    "intersect",
    "pos_flags",
    "signature_for_type",
    "span",
    "sum_spaces",
    "type_of_signature",
    "weyl_group",
    "zero_space",
    "SymplecticSpace",
    "dl_piece",
    "enumerate_lines",
    "gl_line_class",
    "sp_line_class",
    "standard_symplectic",
    "BudgetExceeded",
    "ZCensusResult",
    "ZPointFq",
    "gl_elements",
    "theta",
    "z_census",
    "z_piece",
    "z_points",
]
