"""Effective resistances and node resistance curvature on finite graphs.

Exact rational and floating-point backends behind one interface, Cartesian
product machinery, closed-form grid and ladder analysis, series-parallel
and Monte Carlo resistance oracles, and generic product-edge bounds.
"""

from .bounds import (
    BoundsReport,
    EdgeBoundRecord,
    TreeBoundParams,
    lower_bound_lb,
    tree_bound,
    upper_bound_ub,
    validate_bounds,
)
from .commute import kernel_name, using_compiled_kernel
from .curvature import (
    CurvatureVector,
    compute_curvatures,
    graph_curvature,
    node_curvatures,
    sign_classify,
)
from .eigenbounds import Enclosure, laplacian_spectral_enclosures
from .errors import RescurvError
from .families import (
    complete,
    cycle,
    grid,
    hypercube,
    ladder,
    parse_graph_spec,
    parse_product_spec,
    path,
    star,
)
from .graph import WeightedGraph, build_graph, load_graph, save_graph
from .grids_ladders import (
    GridTheoremReport,
    LadderResistanceTable,
    WIDE_GRID_BOUNDARY_FLOOR,
    central_edge_resistance_sweep,
    corner_curvature,
    grid_boundary_curvatures,
    ladder_alpha,
    ladder_curvatures,
    rail_resistance,
    rung_resistance,
    verify_grid_theorem,
)
from .products import (
    ProductDescriptor,
    cartesian_product,
    classify_boundary_interior,
    product_eigensystem,
    product_graph,
    product_laplacian,
    product_node_curvatures,
)
from .resistance_laws import (
    MCEstimate,
    TerminalNetwork,
    mc_effective_resistance,
    network_from_graph,
    parallel_reduce,
    random_series_parallel,
    reduce_to_resistance,
    series_reduce,
    terminal_network,
)
from .spectral import (
    EigenSystem,
    Laplacian,
    Pseudoinverse,
    ResistanceMatrix,
    effective_resistance,
    eigensystem,
    laplacian,
    pseudoinverse,
    pseudoinverse_via_eigensystem,
    resistance_matrix,
    resistance_matrix_of,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
