"""Path matrices, path spectra and path energies of simple graphs."""

__version__ = "0.1.0"

from .bounds import (
    BOUND_IDS,
    FAMILY_NAMES,
    BoundReport,
    BoundSuite,
    ClosedForm,
    check_eigenvalue_bound,
    check_energy_relation,
    check_pe_degree_bound,
    check_pe_edge_bound,
    check_pe_lower_bound,
    check_row_sum_bound,
    closed_form_spectrum,
    evaluate_all_bounds,
    uniform_entries_premise,
)
from .disjoint import (
    PathMatrix,
    brute_force_disjoint_paths,
    max_disjoint_paths,
    path_matrix,
)
from .explorer import (
    ScanOptions,
    ScanRecord,
    ScanResult,
    ScanSummary,
    analyze_graph,
    records_to_csv,
    scan_stream,
    stratified_report,
)
from .graph6 import Graph6ParseError, emit_graph6, parse_graph6
from .graphs import (
    BlockDecomposition,
    Graph,
    antiprism,
    block_decomposition,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    connected_components,
    cycle,
    degrees,
    girth,
    hypercube,
    is_biconnected,
    is_connected,
    line_graph,
    max_degree,
    path_graph,
    prism,
    star,
    wheel,
)
from .spectral import (
    EnergyReport,
    SinglePositiveCheck,
    Spectrum,
    adjacency_spectrum,
    count_signs,
    energy_report,
    graph_energy,
    path_energy,
    path_spectral_radius,
    path_spectrum,
    symmetric_eigenvalues,
    verify_single_positive_identity,
)
