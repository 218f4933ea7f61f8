"""Quadratic embedding constants of graphs, star products and related bounds."""

from .condmin import (
    PhiInstance,
    cond_min,
    cond_min_zero_case,
    phi_eval,
    solve_J_shift,
    stationarity_residual,
)
from .graphs import (
    Graph,
    GraphError,
    build_graph,
    distance_matrix,
    format_edge_list,
    is_isometric_subgraph,
    named_graph,
    parse_edge_list,
    read_edge_list,
    star_product,
)
from .minroot import (
    INF,
    ParamPair,
    all_roots,
    bounds_basic,
    bounds_sharp,
    breakpoints,
    closed_form_r2,
    eval_f,
    min_root,
    truncated,
)
from .qec import (
    QECResult,
    alternating_witness,
    path_pencil_result,
    qec_exact,
    qec_path_pencil,
    qec_rayleigh,
    thm56_bounds,
    tree_qec_bound_check,
)
from .sequences import (
    a_closed,
    a_series,
    b_ceil,
    convolution_check,
    det_An,
    det_Anu,
    run_suite,
)
from .star_bounds import (
    FactorSummary,
    harmonic_corollary,
    lambda_upper,
    q12,
    q12_radical,
    qec_sandwich,
    star_bound_report,
    zero_rule,
)

__version__ = "0.1.0"

__all__ = [
    "INF",
    "Graph",
    "GraphError",
    "build_graph",
    "named_graph",
    "distance_matrix",
    "star_product",
    "is_isometric_subgraph",
    "parse_edge_list",
    "read_edge_list",
    "format_edge_list",
    "ParamPair",
    "eval_f",
    "breakpoints",
    "min_root",
    "all_roots",
    "closed_form_r2",
    "bounds_basic",
    "bounds_sharp",
    "truncated",
    "PhiInstance",
    "phi_eval",
    "cond_min",
    "cond_min_zero_case",
    "stationarity_residual",
    "solve_J_shift",
    "QECResult",
    "qec_exact",
    "qec_rayleigh",
    "qec_path_pencil",
    "path_pencil_result",
    "thm56_bounds",
    "alternating_witness",
    "tree_qec_bound_check",
    "FactorSummary",
    "lambda_upper",
    "qec_sandwich",
    "zero_rule",
    "harmonic_corollary",
    "q12",
    "q12_radical",
    "star_bound_report",
    "a_closed",
    "a_series",
    "b_ceil",
    "convolution_check",
    "det_An",
    "det_Anu",
    "run_suite",
]
