#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "graph_pum/graph.hpp"

namespace gpum {

enum class GraphFormat { Auto, EdgeList, MatrixMarket };

/// Undirected edges as read from disk, before Laplacian assembly.
struct EdgeListData {
  Vertex vertex_count = 0;
  std::vector<WeightedEdge> edges;
};

/// `i i' [weight]` per line with 1-based labels; `#` and `%` start comments.
/// The vertex count is the largest label seen.
EdgeListData parse_edge_list(std::istream& in);

/// MatrixMarket coordinate format (real, integer or pattern; general or
/// symmetric). Diagonal entries are ignored, the lower/upper triangle is
/// treated as one undirected edge.
EdgeListData parse_matrix_market(std::istream& in);

GraphFormat detect_format(const std::filesystem::path& path);

Graph read_graph(const std::filesystem::path& path, LaplacianKind kind,
                 MetricKind metric = MetricKind::ShortestPathHops,
                 GraphFormat format = GraphFormat::Auto);

/// Two-column CSV `vertex,value` with 1-based vertex labels. A header row is
/// skipped if its first field is not numeric. Every vertex must be present.
Signal read_signal_csv(const std::filesystem::path& path, Vertex n);

void write_edge_list(std::ostream& out, const EdgeListData& data);

}  // namespace gpum
