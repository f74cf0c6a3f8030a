"""Local search for feedback vertex set in minor-free graphs, with exact
oracles, exchange-graph and r-division verifiers, and counterexample
generators."""

from .graph import (
    Cycle,
    Graph,
    build_graph,
    connected_components,
    contract_edge,
    delete_vertices,
    enumerate_cycles,
    find_shortest_cycle,
    is_acyclic,
    simplify,
)
from .solver import (
    AnalysisConstants,
    RunReport,
    SearchParams,
    Solution,
    bounded_fvs,
    derive_constants,
    greedy_initial,
    improve_once,
    is_feasible,
    local_search,
)
from .oracle import FVS, OCT, ProblemKind, SubsetFVS, exact_fvs, exact_min, oct_feasible, subset_fvs_feasible
from .exchange import (
    ExchangeGraph,
    build_exchange_graph,
    contract_steiner_forest,
    verify_exchange_properties,
    verify_structure_lemma,
)
from .division import RDivision, audit_local_vs_global, balanced_separator, r_division, verify_r_division
from .instances import (
    DrawnGraph,
    gen_diagonal_grid,
    gen_grid,
    gen_k3n,
    gen_partial_ktree,
    lift_solution,
    planarize_1planar,
    random_minimal_fvs,
    verify_local_optimality,
)

__version__ = "0.1.0"
