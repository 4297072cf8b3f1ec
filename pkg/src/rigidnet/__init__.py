"""Combinatorial rigidity analysis of network graphs.

The package measures how close a graph is to generic planar rigidity (the
rigidity index: independent edge count over 2n - 3) and how much slack it
carries (the redundancy index: the fraction of edges whose removal does not
change the rigidity index), decides minimal, redundant and global rigidity,
cross-checks the combinatorial rank against an exact-arithmetic rigidity
matrix, and sweeps the sensing radius of random geometric deployments to
locate the ratios where the indices first reach 1.
"""

from .errors import (
    BadGridError,
    DuplicateInsertError,
    IndexOutOfRangeError,
    InvalidSideError,
    KOutOfRangeError,
    LoopEdgeError,
    ParseError,
    RigidnetError,
    SizeMismatchError,
    UnknownEdgeError,
)
from .geometric import (
    Deployment,
    dump_deployment,
    geometric_graph,
    load_deployment,
    sample_deployment,
)
from .graph import (
    Edge,
    Graph,
    canonical_edge,
    dump_edge_list,
    graph_from_edge_list,
    is_k_connected,
    load_edge_list,
    remove_edges,
)
from .indices import (
    IndexReport,
    RatioValue,
    analyze,
    format_report,
    is_generalized_redundant,
    redundancy_index,
    redundancy_index_k,
    redundant_edge_set,
    redundant_edge_subsets,
    rigidity_index,
)
from .matroid import (
    RigidityOracle,
    independent_basis,
    is_minimally_rigid,
    is_rigid,
    matroid_rank,
)
from .numeric import (
    Configuration,
    RigidityMatrix,
    generic_rank,
    is_infinitesimally_rigid,
    matrix_rank,
    rigidity_matrix,
)
from .sweep import (
    REDUNDANCY,
    RIGIDITY,
    SweepCurve,
    ratio_grid,
    relative_increase,
    sweep_average,
    sweep_single,
    threshold_ratio,
    write_curve_csv,
)

__version__ = "0.1.0"

__all__ = [
    "BadGridError",
    "Configuration",
    "Deployment",
    "DuplicateInsertError",
    "Edge",
    "Graph",
    "IndexOutOfRangeError",
    "IndexReport",
    "InvalidSideError",
    "KOutOfRangeError",
    "LoopEdgeError",
    "ParseError",
    "RatioValue",
    "REDUNDANCY",
    "RIGIDITY",
    "RigidityMatrix",
    "RigidityOracle",
    "RigidnetError",
    "SizeMismatchError",
    "SweepCurve",
    "UnknownEdgeError",
    "analyze",
    "canonical_edge",
    "dump_deployment",
    "dump_edge_list",
    "format_report",
    "generic_rank",
    "geometric_graph",
    "graph_from_edge_list",
    "independent_basis",
    "is_generalized_redundant",
    "is_infinitesimally_rigid",
    "is_k_connected",
    "is_minimally_rigid",
    "is_rigid",
    "load_deployment",
    "load_edge_list",
    "matrix_rank",
    "matroid_rank",
    "ratio_grid",
    "redundancy_index",
    "redundancy_index_k",
    "redundant_edge_set",
    "redundant_edge_subsets",
    "relative_increase",
    "remove_edges",
    "rigidity_index",
    "rigidity_matrix",
    "sample_deployment",
    "sweep_average",
    "sweep_single",
    "threshold_ratio",
    "write_curve_csv",
]
