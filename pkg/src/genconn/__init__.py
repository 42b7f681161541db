"""Exact solver and certified-reduction toolkit for generalized
(edge-)connectivity of graphs."""

from .graphs import (
    CnfFormula,
    Graph,
    GraphError,
    ReductionOutput,
    SteinerTree,
    ThreeDMInstance,
    is_connected,
    line_graph,
    vertex_set,
)
from .io import (
    FormatError,
    parse_3dm,
    parse_cnf,
    parse_graph,
    parse_graph_and_set,
    serialize_3dm,
    serialize_cnf,
    serialize_graph,
    serialize_reduction,
)
from .reductions import (
    reduce_3dm_to_p1,
    reduce_3dm_to_p1_with_roles,
    reduce_3sat_to_lambda2,
    reduce_lambda2_to_lambdal,
    reduce_lambda3_to_lambdak,
    reduce_lambda_to_kappa,
    reduce_p1_to_kappa,
)
from .solver import (
    GuardError,
    PackingResult,
    classical_kappa,
    classical_lambda,
    decide_3dm,
    decide_3sat,
    decide_kappa_set,
    decide_lambda_set,
    decide_problem1,
    kappa_k,
    kappa_set,
    lambda_k,
    lambda_set,
    solve_problem1,
)
from .trees import (
    edge_disjoint,
    enumerate_steiner_trees,
    internally_disjoint,
    is_steiner_tree,
)
from .verify import (
    DEFAULT_BUDGETS,
    VerificationReport,
    VerifyBudget,
    gen_3dm,
    gen_cnf,
    gen_connected_graphs,
    verify_packing_result,
    verify_reduction,
)

__version__ = "0.1.0"

__all__ = [
    "CnfFormula",
    "DEFAULT_BUDGETS",
    "FormatError",
    "Graph",
    "GraphError",
    "GuardError",
    "PackingResult",
    "ReductionOutput",
    "SteinerTree",
    "ThreeDMInstance",
    "VerificationReport",
    "VerifyBudget",
    "classical_kappa",
    "classical_lambda",
    "decide_3dm",
    "decide_3sat",
    "decide_kappa_set",
    "decide_lambda_set",
    "decide_problem1",
    "edge_disjoint",
    "enumerate_steiner_trees",
    "gen_3dm",
    "gen_cnf",
    "gen_connected_graphs",
    "internally_disjoint",
    "is_connected",
    "is_steiner_tree",
    "kappa_k",
    "kappa_set",
    "lambda_k",
    "lambda_set",
    "line_graph",
    "parse_3dm",
    "parse_cnf",
    "parse_graph",
    "parse_graph_and_set",
    "reduce_3dm_to_p1",
    "reduce_3dm_to_p1_with_roles",
    "reduce_3sat_to_lambda2",
    "reduce_lambda2_to_lambdal",
    "reduce_lambda3_to_lambdak",
    "reduce_lambda_to_kappa",
    "reduce_p1_to_kappa",
    "serialize_3dm",
    "serialize_cnf",
    "serialize_graph",
    "serialize_reduction",
    "solve_problem1",
    "vertex_set",
    "verify_packing_result",
    "verify_reduction",
]
