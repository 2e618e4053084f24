from .factorizations import is_associated, nontrivial_divisors, sigma
from .qcount import (
    count_collisions,
    count_component,
    count_D_single,
    count_decomposables,
    count_graph,
    count_P,
    count_two_collision,
    orbit_size_exp,
    orbit_size_trig,
    qp_eval,
)
from .qpoly import QPolynomial
from .refine import NormalizedSet, RefinementMatrix, normalize, refine_pair, refinement_matrix
from .relgraph import (
    RelationGraph,
    SccChain,
    SubgraphSplit,
    Vertex,
    build_graph,
    max_sink_order,
    neighborhood_products,
    scc_chain,
    split_subgraphs,
    transitive_hamiltonian_paths,
)

__all__ = [
    "is_associated",
    "nontrivial_divisors",
    "sigma",
    "count_collisions",
    "count_component",
    "count_D_single",
    "count_decomposables",
    "count_graph",
    "count_P",
    "count_two_collision",
    "orbit_size_exp",
    "orbit_size_trig",
    "qp_eval",
    "QPolynomial",
    "NormalizedSet",
    "RefinementMatrix",
    "normalize",
    "refine_pair",
    "refinement_matrix",
    "RelationGraph",
    "SccChain",
    "SubgraphSplit",
    "Vertex",
    "build_graph",
    "max_sink_order",
    "neighborhood_products",
    "scc_chain",
    "split_subgraphs",
    "transitive_hamiltonian_paths",
]
