"""Exact flagged factorial Q-functions and their Schur-Pfaffian formulas.

Vexillary type C double Schubert polynomials come out as a special case.
Each object is an integer polynomial in the x, z, b variables and has a
tableau route plus a Pfaffian or determinant route.
"""

from .pfaffian import (
    HypothesisError,
    ivanov_q_pf,
    jacobi_trudi_s_tilde,
    laurent_schur_pf,
    matrix_pfaffian,
    pfaffian_hypothesis_violation,
    q_flagged_pfaffian,
    schur_pf,
)
from .polyring import Polynomial, b, parse_json, parse_text, star, swap_xz, x, z
from .shapes_tableaux import (
    FlaggedStrictPartition,
    MarkedShiftedTableau,
    SkewShape,
    decompose_q,
    enumerate_mst,
    ivanov_q_tableau,
    q_flagged_tableau,
    s_tilde,
)
from .vexillary import Triple, invert_triple, reduce_to_essential, schubert_vexillary, shape_from_triple

__all__ = [
    "FlaggedStrictPartition",
    "HypothesisError",
    "MarkedShiftedTableau",
    "Polynomial",
    "SkewShape",
    "Triple",
    "b",
    "decompose_q",
    "enumerate_mst",
    "invert_triple",
    "ivanov_q_pf",
    "ivanov_q_tableau",
    "jacobi_trudi_s_tilde",
    "laurent_schur_pf",
    "matrix_pfaffian",
    "parse_json",
    "parse_text",
    "pfaffian_hypothesis_violation",
    "q_flagged_pfaffian",
    "q_flagged_tableau",
    "reduce_to_essential",
    "s_tilde",
    "schubert_vexillary",
    "schur_pf",
    "shape_from_triple",
    "star",
    "swap_xz",
    "x",
    "z",
]
