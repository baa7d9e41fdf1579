#include "graph_pum/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <string>
#include <tuple>

#include "graph_pum/analysis.hpp"

namespace gpum {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string scientific(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

}  // namespace

void validate(const ExperimentConfig& config, Vertex n) {
  const auto& grid = config.sample_counts;
  if (grid.empty()) fail(ErrorCode::InvalidArgument, "empty sample-count grid");
  if (!std::is_sorted(grid.begin(), grid.end()) ||
      std::adjacent_find(grid.begin(), grid.end()) != grid.end()) {
    fail(ErrorCode::InvalidArgument, "sample-count grid must be strictly ascending");
  }
  if (grid.front() < 1 || grid.back() > n) {
    fail(ErrorCode::InvalidArgument, "sample counts must lie in [1, n]");
  }
  if (config.pum.subdomains > grid.front()) {
    fail(ErrorCode::JTooLarge, "J exceeds the smallest sample count");
  }
  if (!(config.pum.radius >= 0.0)) fail(ErrorCode::NegativeRadius, "r must be >= 0");
  if (config.repetitions < 1) fail(ErrorCode::InvalidArgument, "repetitions must be >= 1");
}

std::vector<BenchmarkRow> run_benchmark(const Graph& g, const Signal& x,
                                        const ExperimentConfig& config) {
  validate(config, g.size());
  if (x.size() != g.size()) fail(ErrorCode::DimensionMismatch, "signal length mismatch");

  std::vector<BenchmarkRow> rows;
  for (int rep = 0; rep < config.repetitions; ++rep) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(rep);
    const VertexList order = nested_sampling_sequence(g.size(), config.sample_counts.back(), seed);
    for (Vertex count : config.sample_counts) {
      const SampleSet samples =
          sample_signal(x, VertexList(order.begin(), order.begin() + count));
      BenchmarkRow row;
      row.samples = count;
      row.seed = seed;
      row.subdomains = config.pum.subdomains;
      row.radius = config.pum.radius;

      auto start = Clock::now();
      const PumApproximant pum = gbf_pum(g, samples, config.pum);
      row.pum_seconds = seconds_since(start);
      row.rrmse = rrmse(x, pum.values);

      if (config.baseline) {
        start = Clock::now();
        const Signal global = gbf_global(g, config.pum.kernel, samples, config.pum.gamma);
        row.global_seconds = seconds_since(start);
        row.global_rrmse = rrmse(x, global);
      }
      rows.push_back(row);
    }
  }
  std::sort(rows.begin(), rows.end(), [](const BenchmarkRow& a, const BenchmarkRow& b) {
    return std::tie(a.samples, a.seed) < std::tie(b.samples, b.seed);
  });
  return rows;
}

void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows,
                         bool timings) {
  const bool baseline = !rows.empty() && rows.front().global_rrmse.has_value();
  out << "N,seed,J,r,rrmse";
  if (timings) out << ",pum_seconds";
  if (baseline) out << ",global_rrmse";
  if (baseline && timings) out << ",global_seconds";
  out << '\n';
  for (const auto& row : rows) {
    out << row.samples << ',' << row.seed << ',' << row.subdomains << ',' << row.radius << ','
        << scientific(row.rrmse);
    if (timings) out << ',' << scientific(row.pum_seconds);
    if (baseline) out << ',' << scientific(row.global_rrmse.value_or(0.0));
    if (baseline && timings) out << ',' << scientific(row.global_seconds.value_or(0.0));
    out << '\n';
  }
}

double median(std::vector<double> values) {
  if (values.empty()) fail(ErrorCode::InvalidArgument, "median of an empty set");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace gpum
