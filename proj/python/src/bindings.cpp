#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "graph_pum/analysis.hpp"
#include "graph_pum/benchmark.hpp"
#include "graph_pum/generators.hpp"
#include "graph_pum/io.hpp"
#include "graph_pum/spectral.hpp"

namespace py = pybind11;
using namespace gpum;

namespace {

Graph from_edges(Vertex n, const std::vector<std::tuple<Vertex, Vertex, double>>& edges,
                 LaplacianKind kind, MetricKind metric) {
  std::vector<WeightedEdge> list;
  list.reserve(edges.size());
  for (const auto& [u, v, w] : edges) list.push_back({u, v, w});
  return build_graph(n, list, kind, metric);
}

PumConfig make_config(Eigen::Index subdomains, double radius, std::optional<Vertex> start,
                      PouKind pou, KernelSpec kernel, double gamma, unsigned threads) {
  PumConfig c;
  c.subdomains = subdomains;
  c.radius = radius;
  c.start = start;
  c.pou = pou;
  c.kernel = kernel;
  c.gamma = gamma;
  c.threads = threads;
  return c;
}

}  // namespace

PYBIND11_MODULE(_graph_pum, m) {
  m.doc() = "Partition of unity interpolation with graph basis functions";

  static py::exception<Error> error(m, "GraphPumError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(std::string(to_string(e.code())), e.what()).ptr());
    }
  });

  py::enum_<LaplacianKind>(m, "LaplacianKind")
      .value("NegativeAdjacency", LaplacianKind::NegativeAdjacency)
      .value("Standard", LaplacianKind::Standard)
      .value("Normalized", LaplacianKind::Normalized)
      .value("Custom", LaplacianKind::Custom);
  py::enum_<MetricKind>(m, "MetricKind")
      .value("ShortestPathHops", MetricKind::ShortestPathHops)
      .value("ShortestPathWeighted", MetricKind::ShortestPathWeighted);
  py::enum_<PouKind>(m, "PouKind")
      .value("IndicatorSubdomain", PouKind::IndicatorSubdomain)
      .value("IndicatorCluster", PouKind::IndicatorCluster);
  py::enum_<KernelFamily>(m, "KernelFamily")
      .value("Diffusion", KernelFamily::Diffusion)
      .value("VariationalSpline", KernelFamily::VariationalSpline);
  py::enum_<KernelRoute>(m, "KernelRoute")
      .value("Auto", KernelRoute::Auto)
      .value("Spectral", KernelRoute::Spectral)
      .value("Factorized", KernelRoute::Factorized);

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("directed_edge_count", &Graph::directed_edge_count)
      .def_property_readonly("laplacian_kind", &Graph::laplacian_kind)
      .def_property_readonly("labels", &Graph::labels)
      .def("laplacian", &Graph::laplacian_dense, "dense Laplacian matrix")
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (v < 0 || v >= g.size()) throw py::index_error("vertex out of range");
        auto nb = g.neighbors(v);
        return VertexList(nb.begin(), nb.end());
      });

  m.def("build_graph", &from_edges, py::arg("n"), py::arg("edges"),
        py::arg("kind") = LaplacianKind::Standard,
        py::arg("metric") = MetricKind::ShortestPathHops,
        "Graph from 0-based (u, v, weight) triples");
  m.def("graph_from_laplacian", &graph_from_laplacian, py::arg("laplacian"),
        py::arg("metric") = MetricKind::ShortestPathHops);
  m.def("read_graph",
        [](const std::filesystem::path& path, LaplacianKind kind, MetricKind metric) {
          return read_graph(path, kind, metric);
        },
        py::arg("path"), py::arg("kind") = LaplacianKind::Normalized,
        py::arg("metric") = MetricKind::ShortestPathHops);
  m.def("path_graph", &path_graph, py::arg("n"), py::arg("kind") = LaplacianKind::Standard);
  m.def("grid_graph", &grid_graph, py::arg("rows"), py::arg("cols"),
        py::arg("kind") = LaplacianKind::Standard);
  m.def("random_geometric_graph", &random_geometric_graph, py::arg("n"), py::arg("radius"),
        py::arg("seed"), py::arg("kind") = LaplacianKind::Standard);
  m.def("distances_from",
        [](const Graph& g, const VertexList& sources) { return distances_from(g, sources); },
        py::arg("graph"), py::arg("sources"));
  m.def("laplacian_apply", &laplacian_apply);

  m.def("eigendecompose",
        [](const Graph& g) {
          Spectrum s = eigendecompose(g);
          return py::make_tuple(s.eigenvalues, s.eigenvectors);
        },
        "(eigenvalues ascending, eigenvectors as columns)");
  m.def("bandlimited_signal",
        [](const Graph& g, Vertex count) { return bandlimited_signal(eigendecompose(g), count); },
        py::arg("graph"), py::arg("count"));

  py::class_<JCenterResult>(m, "JCenterResult")
      .def_readonly("centers", &JCenterResult::centers)
      .def_property_readonly("clusters",
                             [](const JCenterResult& r) { return r.clustering.clusters; })
      .def_readonly("fill_distance", &JCenterResult::fill_distance)
      .def_readonly("fill_history", &JCenterResult::fill_history);
  m.def("greedy_j_center",
        [](const Graph& g, const VertexList& candidates, Eigen::Index count,
           std::optional<Vertex> start) { return greedy_j_center(g, candidates, count, start); },
        py::arg("graph"), py::arg("candidates"), py::arg("count"), py::arg("start") = py::none());
  m.def("fill_distance",
        [](const Graph& g, const VertexList& centers) { return fill_distance(g, centers); });

  py::class_<Cover>(m, "Cover")
      .def_readonly("subdomains", &Cover::subdomains)
      .def_readonly("clusters", &Cover::clusters)
      .def_readonly("centers", &Cover::centers)
      .def_readonly("radius", &Cover::radius)
      .def_readonly("fill_distance", &Cover::fill_distance);
  m.def("build_cover", &build_cover, py::arg("graph"), py::arg("clustering"), py::arg("radius"));

  py::class_<KernelSpec>(m, "KernelSpec")
      .def(py::init([](KernelFamily family, double t, double eps, double s, KernelRoute route) {
             return KernelSpec{family, t, eps, s, route};
           }),
           py::arg("family") = KernelFamily::VariationalSpline, py::arg("t") = 1.0,
           py::arg("eps") = 1e-3, py::arg("s") = 2.0, py::arg("route") = KernelRoute::Auto)
      .def_readwrite("family", &KernelSpec::family)
      .def_readwrite("t", &KernelSpec::t)
      .def_readwrite("eps", &KernelSpec::eps)
      .def_readwrite("s", &KernelSpec::s)
      .def_readwrite("route", &KernelSpec::route);

  m.def("nested_sampling_sequence", &nested_sampling_sequence, py::arg("n"), py::arg("count"),
        py::arg("seed"));
  m.def("gbf_global",
        [](const Graph& g, const VertexList& nodes, const Eigen::VectorXd& values,
           const KernelSpec& kernel, double gamma) {
          return gbf_global(g, kernel, SampleSet{nodes, values}, gamma);
        },
        py::arg("graph"), py::arg("nodes"), py::arg("values"), py::arg("kernel") = KernelSpec{},
        py::arg("gamma") = 0.0);

  py::class_<PumApproximant>(m, "PumApproximant")
      .def_readonly("values", &PumApproximant::values)
      .def_readonly("cover", &PumApproximant::cover)
      .def_property_readonly("centers",
                             [](const PumApproximant& a) { return a.centers.centers; })
      .def_property_readonly("local_values", [](const PumApproximant& a) {
        std::vector<Eigen::VectorXd> out;
        for (const auto& l : a.locals) out.push_back(l.values);
        return out;
      });
  m.def("gbf_pum",
        [](const Graph& g, const VertexList& nodes, const Eigen::VectorXd& values,
           Eigen::Index subdomains, double radius, std::optional<Vertex> start, PouKind pou,
           const KernelSpec& kernel, double gamma, unsigned threads) {
          py::gil_scoped_release release;
          return gbf_pum(g, SampleSet{nodes, values},
                         make_config(subdomains, radius, start, pou, kernel, gamma, threads));
        },
        py::arg("graph"), py::arg("nodes"), py::arg("values"), py::arg("subdomains") = 8,
        py::arg("radius") = 8.0, py::arg("start") = py::none(),
        py::arg("pou") = PouKind::IndicatorCluster, py::arg("kernel") = KernelSpec{},
        py::arg("gamma") = 0.0, py::arg("threads") = 0u);

  m.def("rrmse", &rrmse, py::arg("x"), py::arg("approx"));
  m.def("global_bound",
        [](const Graph& g, const Signal& x, const PumApproximant& a, double p) {
          const GlobalBoundReport r = verify_global_bound(g, x, a, p);
          py::dict d;
          d["boundary_condition"] = r.boundary_condition;
          d["holds"] = r.holds();
          d["value"] = py::make_tuple(r.value.lhs, r.value.rhs);
          d["gradient"] = py::make_tuple(r.gradient.lhs, r.gradient.rhs);
          d["laplacian"] = py::make_tuple(r.laplacian.lhs, r.laplacian.rhs);
          return d;
        },
        py::arg("graph"), py::arg("x"), py::arg("approximant"), py::arg("p") = 2.0,
        "measured global errors (lhs) against the bounds built from local errors (rhs)");
}
