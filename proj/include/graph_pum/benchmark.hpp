#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "graph_pum/approximation.hpp"

namespace gpum {

/// Sampling sweep: for each seed and each N in `sample_counts` the nested
/// sampling set W_N is interpolated with GBF-PUM (and optionally the global
/// GBF fit).
struct ExperimentConfig {
  PumConfig pum;
  std::vector<Vertex> sample_counts{132, 264, 528, 1056, 2112};
  std::uint64_t seed = 7;
  int repetitions = 1;
  bool baseline = false;
};

struct BenchmarkRow {
  Vertex samples = 0;
  std::uint64_t seed = 0;
  Eigen::Index subdomains = 0;
  double radius = 0.0;
  double rrmse = 0.0;
  double pum_seconds = 0.0;
  std::optional<double> global_rrmse;
  std::optional<double> global_seconds;
};

void validate(const ExperimentConfig& config, Vertex n);

/// Rows sorted by (N, seed). Timings cover the PUM pipeline and the global
/// fit only; loading the graph and building the reference signal are excluded.
std::vector<BenchmarkRow> run_benchmark(const Graph& g, const Signal& x,
                                        const ExperimentConfig& config);

void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows,
                         bool timings = true);

double median(std::vector<double> values);

}  // namespace gpum
