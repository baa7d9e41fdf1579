#include "verify_suite.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <string>

#include <json.hpp>

#include "graph_pum/analysis.hpp"
#include "graph_pum/approximation.hpp"
#include "graph_pum/clustering.hpp"
#include "graph_pum/generators.hpp"
#include "graph_pum/partition.hpp"

namespace gpum {

namespace {

using nlohmann::json;

constexpr double kProductRuleTolerance = 1e-10;
constexpr double kPartitionTolerance = 1e-12;
constexpr double kInterpolationTolerance = 1e-8;
const double kExponents[] = {1.0, 2.0, kInfinity};

class Recorder {
 public:
  explicit Recorder(std::ostream& out) : out_(out) {}

  void record(json line, bool passed) {
    line["passed"] = passed;
    out_ << line.dump() << '\n';
    ++(passed ? passed_ : failed_);
  }

  /// Runs `body`; an exception thrown inside counts as a failed check.
  template <class Body>
  void guarded(const std::string& check, const std::string& instance, Body&& body) {
    try {
      body();
    } catch (const Error& e) {
      record({{"check", check}, {"instance", instance}, {"error", to_string(e.code())},
              {"message", e.what()}},
             false);
    }
  }

  bool finish() {
    out_ << json{{"summary", true}, {"passed", passed_}, {"failed", failed_}}.dump() << '\n';
    return failed_ == 0;
  }

 private:
  std::ostream& out_;
  int passed_ = 0;
  int failed_ = 0;
};

json exponent(double p) { return std::isinf(p) ? json("inf") : json(p); }

Signal random_signal(Vertex n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Signal x(n);
  for (Vertex i = 0; i < n; ++i) x[i] = u(rng);
  return x;
}

json inequality(const Inequality& q) { return {{"lhs", q.lhs}, {"rhs", q.rhs}}; }

void check_product_rules(Recorder& rec, const Graph& g, const std::string& id,
                         std::mt19937_64& rng) {
  const Signal x = random_signal(g.size(), rng);
  const Signal y = random_signal(g.size(), rng);
  rec.guarded("product_rule", id, [&] {
    const double grad = verify_product_rule_gradient(g, x, y);
    const double lap = verify_product_rule_laplacian(g, x, y);
    rec.record({{"check", "product_rule_gradient"}, {"instance", id}, {"residual", grad},
                {"tolerance", kProductRuleTolerance}},
               grad <= kProductRuleTolerance);
    rec.record({{"check", "product_rule_laplacian"}, {"instance", id}, {"residual", lap},
                {"tolerance", kProductRuleTolerance}},
               lap <= kProductRuleTolerance);
  });
  for (double p : kExponents) {
    rec.guarded("norm_estimates", id, [&] {
      const auto r = verify_norm_estimates(g, x, y, p);
      rec.record({{"check", "norm_estimate_gradient"}, {"instance", id}, {"p", exponent(p)},
                  {"bound", inequality(r.gradient)}},
                 r.gradient.holds());
      rec.record({{"check", "norm_estimate_laplacian"}, {"instance", id}, {"p", exponent(p)},
                  {"bound", inequality(r.laplacian)}},
                 r.laplacian.holds());
    });
  }
}

void check_pum(Recorder& rec, const Graph& g, const std::string& id, std::mt19937_64& rng) {
  const Vertex n = g.size();
  std::uniform_int_distribution<Vertex> pick_n(std::max<Vertex>(2, n / 4), n);
  std::uniform_int_distribution<int> pick_r(1, 3);
  const Vertex count = pick_n(rng);
  const VertexList w = nested_sampling_sequence(n, count, rng());
  const Signal x = random_signal(n, rng);
  const SampleSet samples = sample_signal(x, w);

  PumConfig config;
  config.subdomains = std::min<Eigen::Index>(count, 1 + static_cast<Eigen::Index>(rng() % 4));
  config.radius = pick_r(rng);
  // the spline needs eps > -lambda_1, which fails for indefinite Laplacians
  if (g.laplacian_kind() == LaplacianKind::NegativeAdjacency) {
    config.kernel.family = KernelFamily::Diffusion;
    config.kernel.t = 1.0;
  } else {
    config.kernel.family = KernelFamily::VariationalSpline;
    config.kernel.eps = 0.1;
    config.kernel.s = 2.0;
  }
  config.threads = 1;

  for (PouKind pou : {PouKind::IndicatorCluster, PouKind::IndicatorSubdomain}) {
    const std::string pou_name = pou == PouKind::IndicatorCluster ? "cluster" : "subdomain";
    config.pou = pou;
    rec.guarded("pum", id, [&] {
      const PumApproximant approx = gbf_pum(g, samples, config);
      const json base{{"instance", id}, {"pou", pou_name}, {"J", config.subdomains},
                      {"r", config.radius}, {"N", count}};

      if (pou == PouKind::IndicatorCluster) {
        // C_j in V_j, union V, reach h + r and connectivity are checked while building
        json line = base;
        line["check"] = "cover_invariants";
        line["fill_distance"] = approx.cover.fill_distance;
        rec.record(line, true);
      }

      Signal total = Signal::Zero(n);
      double min_weight = 0.0;
      for (Eigen::Index j = 0; j < approx.partition.size(); ++j) {
        const Signal phi = approx.partition.dense(j, n);
        total += phi;
        min_weight = std::min(min_weight, phi.minCoeff());
      }
      const double pou_defect = (total.array() - 1.0).abs().maxCoeff();
      json pou_line = base;
      pou_line["check"] = "partition_of_unity";
      pou_line["defect"] = pou_defect;
      pou_line["min_weight"] = min_weight;
      rec.record(pou_line, pou_defect <= kPartitionTolerance && min_weight >= 0.0);

      const bool boundary =
          check_boundary_condition(g, approx.cover, approx.partition).satisfied();
      if (pou == PouKind::IndicatorCluster) {
        json line = base;
        line["check"] = "boundary_condition";
        rec.record(line, boundary);
      }

      double interp = 0.0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        interp = std::max(interp, std::abs(approx.values[w[i]] - x[w[i]]));
      }
      json interp_line = base;
      interp_line["check"] = "interpolation";
      interp_line["max_sample_error"] = interp;
      rec.record(interp_line, interp <= kInterpolationTolerance);

      for (double p : kExponents) {
        const auto r = verify_global_bound(g, x, approx, p);
        json line = base;
        line["check"] = "global_bound";
        line["p"] = exponent(p);
        line["boundary_condition"] = r.boundary_condition;
        line["value"] = inequality(r.value);
        if (r.boundary_condition) {
          line["gradient"] = inequality(r.gradient);
          line["laplacian"] = inequality(r.laplacian);
        }
        rec.record(line, r.holds());
      }
    });
  }
}

void check_j_center(Recorder& rec, const Graph& g, const std::string& id,
                    std::mt19937_64& rng) {
  VertexList all(static_cast<std::size_t>(g.size()));
  for (Vertex v = 0; v < g.size(); ++v) all[v] = v;
  const auto count = 1 + static_cast<Eigen::Index>(rng() % 4);
  rec.guarded("j_center_factor_two", id, [&] {
    const JCenterResult greedy = greedy_j_center(g, all, count, all[rng() % all.size()]);
    const OptimalCenters best = optimal_j_center_bruteforce(g, all, count);
    rec.record({{"check", "j_center_factor_two"}, {"instance", id}, {"J", count},
                {"greedy", greedy.fill_distance}, {"optimal", best.fill_distance}},
               greedy.fill_distance <= 2.0 * best.fill_distance);
  });
}

}  // namespace

bool run_verify_suite(std::ostream& out, const VerifyOptions& options, const Graph* extra) {
  Recorder rec(out);
  const LaplacianKind kinds[] = {LaplacianKind::Standard, LaplacianKind::Normalized,
                                 LaplacianKind::NegativeAdjacency};
  for (int k = 0; k < options.instances; ++k) {
    const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(k);
    std::mt19937_64 rng(seed);
    const auto n = static_cast<Vertex>(8 + rng() % 33);
    const auto extra_edges = static_cast<Vertex>(rng() % (n + 1));
    const LaplacianKind kind = kinds[k % 3];
    const Graph g = random_connected_graph(n, extra_edges, seed, kind, k % 2 == 0);
    const std::string id = "random/" + std::to_string(seed);

    check_product_rules(rec, g, id, rng);
    // an arbitrary diagonal keeps the off-diagonal structure the rules rely on
    Eigen::VectorXd diagonal = random_signal(n, rng) * 3.0;
    check_product_rules(rec, with_diagonal(g, diagonal), id + "/custom", rng);
    check_pum(rec, g, id, rng);

    const Graph small = random_connected_graph(6 + static_cast<Vertex>(rng() % 9),
                                               static_cast<Vertex>(rng() % 6), seed);
    check_j_center(rec, small, id + "/small", rng);
  }
  if (extra != nullptr) {
    std::mt19937_64 rng(options.seed);
    check_product_rules(rec, *extra, "input", rng);
    check_pum(rec, *extra, "input", rng);
  }
  return rec.finish();
}

}  // namespace gpum
