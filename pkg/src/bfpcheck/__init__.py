"""Spectral-radius extremal search and certification for bipartite graphs.

The package builds the near-complete bipartite graph families, computes
their spectral radii three independent ways (dense power iteration, exact
equitable-quotient cubics, exact root isolation), and verifies that the
pendant-shift graphs beat every one-vertex-added candidate, with a
brute-force sweep over all small families as the ground-truth oracle.
"""

from .errors import (
    ConvergenceError,
    GuardExceededError,
    HypothesisError,
    PositivityUndecidedError,
    RootIsolationError,
    RouteDisagreementError,
    UnresolvedRootOrderError,
)
from .exactpoly import (
    IntPolynomial,
    PositivityCertificate,
    RootBracket,
    RootComparison,
    candidate_cubic,
    char_poly,
    compare_largest_roots,
    diff_positive_on_positives,
    largest_real_root,
    pendant_cubic,
)
from .extremal import (
    CandidateSet,
    CounterexampleReport,
    ExtremalSearchResult,
    SearchConfig,
    brute_force_extremal,
    canonical_form,
    enumerate_family,
    is_one_vertex_added_form,
    is_pendant_shift_form,
    one_vertex_added_candidates,
    verify_counterexample,
)
from .graphs import (
    BipartiteGraph,
    DegreeSequence,
    FerrersDiagram,
    build_family,
    build_ferrers,
    column_deficient,
    complete_bipartite,
    is_complete_bipartite,
    parse_degrees,
    pendant_shift,
    row_deficient,
)
from .quotient import QuotientMatrix, RowPartition, lift_eigenvector, quotient, three_block_partition
from .spectral import MinMatrix, SpectralResult, min_matrix, spectral_radius_graph, spectral_radius_sym

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # graphs
    "DegreeSequence", "BipartiteGraph", "FerrersDiagram", "parse_degrees",
    "build_ferrers", "build_family", "complete_bipartite", "row_deficient",
    "column_deficient", "pendant_shift", "is_complete_bipartite",
    # spectral
    "MinMatrix", "SpectralResult", "min_matrix", "spectral_radius_sym",
    "spectral_radius_graph",
    # quotient
    "RowPartition", "QuotientMatrix", "quotient", "lift_eigenvector",
    "three_block_partition",
    # exactpoly
    "IntPolynomial", "RootBracket", "PositivityCertificate", "RootComparison",
    "char_poly", "pendant_cubic", "candidate_cubic", "diff_positive_on_positives",
    "largest_real_root", "compare_largest_roots",
    # extremal
    "SearchConfig", "CandidateSet", "CounterexampleReport", "ExtremalSearchResult",
    "one_vertex_added_candidates", "verify_counterexample", "enumerate_family",
    "brute_force_extremal", "canonical_form", "is_one_vertex_added_form",
    "is_pendant_shift_form",
    # errors
    "HypothesisError", "GuardExceededError", "ConvergenceError",
    "RouteDisagreementError", "RootIsolationError", "UnresolvedRootOrderError",
    "PositivityUndecidedError",
]
