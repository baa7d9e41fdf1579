#pragma once

#include <cstdint>
#include <iosfwd>

#include "graph_pum/graph.hpp"

namespace gpum {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int instances = 20;
};

/// Runs the product-rule, norm-estimate, cover, partition-of-unity, boundary,
/// global-bound, J-center and interpolation checks on seeded random graphs
/// (plus `extra` when given). One JSON object per line, then a summary line.
/// Returns true when every check passed.
bool run_verify_suite(std::ostream& out, const VerifyOptions& options, const Graph* extra);

}  // namespace gpum
