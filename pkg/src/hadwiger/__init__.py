"""Upper bounds on the Hadwiger number with exact small-graph solvers."""

from .bounds import (
    BoundNotApplicable,
    BoundReport,
    brooks_bound,
    chs_sqrt_bound,
    delta2,
    ek_bound,
    evaluate_all,
    improved_bound,
    stacho_delta2_bound,
    stacho_s,
    stacho_s_bound,
    welsh_powell_bound,
)
from .exact import (
    MinorWitness,
    SolverLimitError,
    chromatic_number,
    hadwiger_number,
    hadwiger_witness,
    has_acyclic_contraction_to_any_clique,
    has_acyclic_contraction_to_clique,
    has_acyclic_contraction_to_cycle,
    verify_minor_witness,
)
from .families import (
    FamilySpec,
    build_d_r_n,
    build_figure_1a,
    build_tree_clique_counterexample,
    d_r_n_witness,
)
from .graph import (
    Graph,
    GraphError,
    ReducedClass,
    classify_reduced,
    contract_edge,
    degree_sequence,
    greedy_color,
    is_connected,
    one_reduce,
)

__all__ = [
    "BoundNotApplicable",
    "BoundReport",
    "brooks_bound",
    "chs_sqrt_bound",
    "delta2",
    "ek_bound",
    "evaluate_all",
    "improved_bound",
    "stacho_delta2_bound",
    "stacho_s",
    "stacho_s_bound",
    "welsh_powell_bound",
    "MinorWitness",
    "SolverLimitError",
    "chromatic_number",
    "hadwiger_number",
    "hadwiger_witness",
    "has_acyclic_contraction_to_any_clique",
    "has_acyclic_contraction_to_clique",
    "has_acyclic_contraction_to_cycle",
    "verify_minor_witness",
    "FamilySpec",
    "build_d_r_n",
    "build_figure_1a",
    "build_tree_clique_counterexample",
    "d_r_n_witness",
    "Graph",
    "GraphError",
    "ReducedClass",
    "classify_reduced",
    "contract_edge",
    "degree_sequence",
    "greedy_color",
    "is_connected",
    "one_reduce",
]
