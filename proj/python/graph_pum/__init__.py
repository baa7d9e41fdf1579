"""Partition of unity interpolation of graph signals with graph basis functions."""

from ._graph_pum import (
    Cover,
    Graph,
    GraphPumError,
    JCenterResult,
    KernelFamily,
    KernelRoute,
    KernelSpec,
    LaplacianKind,
    MetricKind,
    PouKind,
    PumApproximant,
    bandlimited_signal,
    build_cover,
    build_graph,
    distances_from,
    eigendecompose,
    fill_distance,
    gbf_global,
    gbf_pum,
    global_bound,
    graph_from_laplacian,
    greedy_j_center,
    grid_graph,
    laplacian_apply,
    nested_sampling_sequence,
    path_graph,
    random_geometric_graph,
    read_graph,
    rrmse,
)

__version__ = "0.1.0"
