#pragma once

#include <cstdint>

#include "graph_pum/graph.hpp"

namespace gpum {

/// v1 - v2 - ... - vn with unit weights.
Graph path_graph(Vertex n, LaplacianKind kind = LaplacianKind::Standard);

/// rows x cols lattice with 4-neighbourhoods and unit weights.
Graph grid_graph(Vertex rows, Vertex cols, LaplacianKind kind = LaplacianKind::Standard);

/// Random spanning tree plus `extra_edges` random chords. Weights are 1 when
/// `unit_weights`, otherwise uniform in [0.5, 2).
Graph random_connected_graph(Vertex n, Vertex extra_edges, std::uint64_t seed,
                             LaplacianKind kind = LaplacianKind::Standard,
                             bool unit_weights = true);

/// Points uniform in the unit square joined when closer than `radius`, with
/// the nearest pairs between components added until the graph is connected.
Graph random_geometric_graph(Vertex n, double radius, std::uint64_t seed,
                             LaplacianKind kind = LaplacianKind::Standard);

}  // namespace gpum
