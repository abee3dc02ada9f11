"""Graph gadgets, neighborhood complexes, exact integer homology, and
certified topological lower bounds for the chromatic number."""

from .complexes import (
    DEFAULT_FACE_BUDGET,
    FaceTable,
    SimplicialComplex,
    cone,
    euler_characteristic,
    faces_up_to,
    neighborhood_complex,
)
from .errors import (
    BudgetExceededError,
    CertificateError,
    InputError,
    ParameterError,
    PreconditionError,
    ToolkitError,
)
from .graphs import (
    CorollaryParams,
    CorollaryResult,
    GadgetResult,
    GadgetSpec,
    Graph,
    build_corollary_graph,
    build_gadget,
    complete_bipartite,
    complete_graph,
    connected_components,
    construct_family,
    cycle_graph,
    is_bipartite,
    is_connected,
    kneser_graph,
    mycielskian,
    triangle_free_chromatic,
)
from .homology import (
    ConnectivityCertificate,
    HomologyGroup,
    boundary_matrix,
    certify_conn_zero,
    homological_connectivity,
    homology_profile,
    reduced_homology,
)
from .invariants import (
    CliqueWitness,
    ColoringWitness,
    chromatic_number,
    contains_triangle,
    greedy_dsatur_bound,
    is_k_colorable,
    max_clique,
    verify_biclique_certificate,
)
from .snf import IntegerMatrix, SnfResult, smith_normal_form
from .verify import (
    BoundReport,
    CorollaryReport,
    WedgeCheckReport,
    compare_bounds,
    run_suite,
    verify_corollary,
    verify_wedge_decomposition,
)

__version__ = "0.1.0"
