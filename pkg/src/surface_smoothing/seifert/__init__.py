from surface_smoothing.seifert.continued_fractions import hj_expand, hj_value
from surface_smoothing.seifert.graded import (
    GradedReport,
    coboundary_coefficient,
    deg_floor_kF,
    dim_A_k,
    gorenstein_exponent,
    graded_report,
    h1_S_quasihomogeneous,
    p_g,
    rationality_cross_check,
)
from surface_smoothing.seifert.star import (
    SeifertData,
    graph_to_seifert,
    orbifold_euler_number,
    seifert_to_graph,
    star_determinant,
)

__all__ = [
    "SeifertData",
    "GradedReport",
    "hj_expand",
    "hj_value",
    "seifert_to_graph",
    "graph_to_seifert",
    "orbifold_euler_number",
    "star_determinant",
    "deg_floor_kF",
    "dim_A_k",
    "p_g",
    "gorenstein_exponent",
    "coboundary_coefficient",
    "h1_S_quasihomogeneous",
    "rationality_cross_check",
    "graded_report",
]
