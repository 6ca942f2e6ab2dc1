"""Oriented alternating sign matrices, tournaments, and the weight-preserving
bijection between them.

The refined Robbins-Rumsey identity

    prod_{i<j} (x_i + y_j) = sum_A prod_i x_i^SE_i(A) y_i^SW_i(A) (x_i + y_i)^V_i(A)

is checked both bijectively (``phi``/``psi``) and by exact polynomial
expansion (``refid_check``/``brid_check``).
"""

from .asm import (
    Asm,
    Cmt,
    IceGrid,
    VertexStats,
    asm_to_cmt,
    build_ice_grid,
    cmt_to_asm,
    column_sums,
    validate_asm,
    validate_cmt,
    vertex_stats,
)
from .bijection import (
    OpStep,
    Trace,
    applicable_lowers,
    applicable_raises,
    lower_op,
    phi,
    phi_any_order,
    phi_s,
    psi,
    psi_s,
    raise_op,
)
from .enumeration import (
    count_strict_formula,
    count_t_s,
    enumerate_asm_bruteforce,
    enumerate_cmt,
    enumerate_ocmt,
    enumerate_strict,
    enumerate_t_s,
    enumerate_tournaments,
)
from .identities import brid_check, lhs_refid, refid_check, rhs_refid, rhs_via_oriented
from .poly import Monomial, Polynomial, poly_add, poly_mul, substitute_lambda
from .tournament import (
    Tournament,
    out_degrees,
    tournament_to_triangle,
    tournament_weight,
    triangle_to_tournament,
    upsets,
)
from .triangle import (
    A,
    B,
    Entry,
    Num,
    Triangle,
    X,
    Y,
    as_oriented_cmt,
    check_admissible,
    compute_ranking,
    entry_values,
    orientations_of,
    triangle_weight,
)

__version__ = "0.1.0"
