"""Exact Jacobians of multigraphs and regular matroids."""

from fractions import Fraction

from . import _core
from ._core import (
    CapExceeded,
    Error,
    ParseError,
    PreconditionError,
    check_equivalence,
    classify_graphs,
    classify_matroids,
    dhar_burn,
    is_q_reduced,
    is_totally_unimodular,
    jacobian,
    matroid_jacobian,
    q_reduce,
    smith_invariants,
    spanning_tree_count,
)

__all__ = [
    "CapExceeded",
    "Error",
    "ParseError",
    "PreconditionError",
    "check_equivalence",
    "classify_graphs",
    "classify_matroids",
    "dhar_burn",
    "is_q_reduced",
    "is_totally_unimodular",
    "jacobian",
    "matroid_jacobian",
    "q_reduce",
    "row_space_projection",
    "smith_invariants",
    "spanning_tree_count",
]


def row_space_projection(matrix):
    """Orthogonal projection onto the row space of an integer matrix, as Fractions."""
    return [[Fraction(p, q) for p, q in row] for row in _core.row_space_projection(matrix)]
