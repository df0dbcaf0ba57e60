"""Generalized Pitman-Stanley polytopes as flow polytopes on grid graphs.

Exact-arithmetic library for the polytope whose lattice points are plane
partitions of the skew shape theta(a, b) with bounded entries: the grid
graphs realizing it, the bijection with integral flows, the vertex
characterizations, transfer-matrix counting and generating functions, and
face counts.
"""

from .vectors import (
    BlockStructure,
    InputError,
    Signature,
    SkewShape,
    ZMatching,
    as_vector,
    block_structure,
    chi,
    conjugate,
    dominates,
    one_dominates,
    reverse,
    signature,
    theta,
    z_dominate,
)
from .grids import (
    SINK,
    FlowError,
    GridGraph,
    IntegerFlow,
    Subgraph,
    betti_number,
    build_graph,
    build_grid_graph,
    build_h_corner_left,
    build_h_corner_right,
    build_h_graph,
    build_h_top,
    count_integral_flows,
    enumerate_integral_flows,
    flow_from_horizontal,
    h_reversed_instance,
    is_forest,
    map_G_to_H,
    support,
    unique_flow_on_forest,
    verify_flow,
)
from .partitions import (
    PlanePartition,
    Trajectory,
    ascii_diagram,
    count_pps,
    enumerate_pps,
    psi,
    psi_inverse,
    row_count_map,
    trajectories,
    vectors_of_shape,
)
from .vertices import (
    ShiftedShape,
    SplitMergeReport,
    count_shifted_syt,
    count_standard_vertex_pps,
    enumerate_standard_fillings,
    enumerate_standard_vertex_pps,
    is_standard_vertex_pp,
    is_unsplittable,
    is_vertex_flow,
    is_vertex_pp,
    shifted_shape_of,
    split_merge_check,
    split_merge_reports,
    staircase_syt_product_formula,
)
from .counting import (
    BinomialExpansion,
    RationalGenFunc,
    TransferMatrix,
    all_patterns,
    binomial_expansion_unsplit,
    build_A,
    count_flows_without_splits,
    count_unsplit_bruteforce,
    count_vertex_pps,
    count_vertices_bruteforce,
    eulerian_polynomial,
    genfunc,
    matrix_power,
    p_coefficients,
    poly_fit,
    v_recurse_first,
    v_recurse_last,
    v_unsplit_matrix,
    v_unsplit_midproduct,
    v_vertices_matrix,
    w_left_member,
    w_right,
)
from .faces import (
    BudgetExceeded,
    FaceVector,
    face_count_base,
    face_count_bruteforce,
    face_count_recurse,
    face_vector_recurse,
    simplex_product_face_vector,
)
from .tables import GoldenTable, TableDiff, TableRow, load_table, reproduce_table

__version__ = "0.1.0"
