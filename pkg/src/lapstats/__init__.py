"""Exact Laplacian coefficients of graphs and the statistics of their
coefficient distributions."""

from .errors import ConvergenceError, GuardExceeded, InputError
from .graphs import (
    FamilySpec,
    Graph,
    cartesian_product,
    component_count,
    cone,
    disjoint_union,
    edge_count,
    empty_graph,
    graph_from_edge_list,
    is_bipartite,
    is_tree,
    join,
    make_family,
    max_degree,
    parse_edge_list,
    random_regular,
    random_tree,
    read_edge_list,
    subdivision,
)
from .exact import (
    charpoly_monic,
    closed_form_coefficients,
    coefficients_from_eigenvalues,
    forest_sum_oracle,
    laplacian_coefficients,
    laplacian_matrix,
    matching_counts,
    signless_coefficients,
    signless_laplacian_matrix,
    spanning_tree_count,
    wiener_index,
)
from .spectra import (
    Spectrum,
    anderson_morley_bound,
    closed_form_spectrum,
    cone_spectrum,
    expand_from_spectrum,
    gershgorin_bound,
    join_spectrum,
    numeric_spectrum,
    trace_check,
)
from .limits import (
    LimitStats,
    clt_distance,
    cone_variance_lower_bound,
    family_limit_constants,
    hypercube_variance_lower_bound,
    llt_distance,
    mean_variance,
    normalized_probabilities,
    poisson_distance,
    poisson_reference,
    probabilities_from_spectrum,
    variance_lower_bound,
)
from .diagnostics import DiagnosticsRow, diagnose_family, diagnose_graph, run_sweep
from .corpus import CheckResult, corpus_graphs, corpus_trees, run_verification

__version__ = "0.1.0"
