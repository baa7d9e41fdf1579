#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "graph_pum/io.hpp"

using namespace gpum;

namespace {

const std::filesystem::path kFixtures = GRAPH_PUM_FIXTURES;

std::filesystem::path scratch(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("graph_pum_io_" + name);
  std::ofstream(path) << content;
  return path;
}

ErrorCode read_error(const std::filesystem::path& path) {
  try {
    read_graph(path, LaplacianKind::Standard);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("read_graph accepted " << path);
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("edge list parsing") {
  std::istringstream in("# comment\n1 2\n2 3 2.5 % trailing\n\n3,1,0.5\n");
  const EdgeListData data = parse_edge_list(in);
  CHECK(data.vertex_count == 3);
  REQUIRE(data.edges.size() == 3);
  CHECK(data.edges[0].weight == 1.0);
  CHECK(data.edges[1].u == 1);
  CHECK(data.edges[1].weight == 2.5);
  CHECK(data.edges[2].weight == 0.5);
}

TEST_CASE("edge list errors") {
  std::istringstream zero("0 1\n");
  CHECK_THROWS_AS(parse_edge_list(zero), Error);
  std::istringstream junk("1 x\n");
  CHECK_THROWS_AS(parse_edge_list(junk), Error);
  std::istringstream fields("1 2 3 4\n");
  CHECK_THROWS_AS(parse_edge_list(fields), Error);
  CHECK(read_error("/nonexistent/graph.edges") == ErrorCode::FileNotFound);
  CHECK(read_error(scratch("split.edges", "1 2\n3 4\n")) == ErrorCode::DisconnectedGraph);
  CHECK(read_error(scratch("loop.edges", "1 1\n1 2\n")) == ErrorCode::SelfLoop);
}

TEST_CASE("MatrixMarket parsing") {
  std::istringstream in(
      "%%MatrixMarket matrix coordinate real symmetric\n% c\n3 3 4\n1 1 5\n2 1 1.5\n3 2 2\n3 3 1\n");
  const EdgeListData data = parse_matrix_market(in);
  CHECK(data.vertex_count == 3);
  REQUIRE(data.edges.size() == 2);
  CHECK(data.edges[0].weight == 1.5);

  std::istringstream short_file("%%MatrixMarket matrix coordinate real general\n2 2 3\n1 2 1\n");
  CHECK_THROWS_AS(parse_matrix_market(short_file), Error);
  std::istringstream dense("%%MatrixMarket matrix array real general\n2 2\n");
  CHECK_THROWS_AS(parse_matrix_market(dense), Error);
}

TEST_CASE("fixtures load") {
  const Graph path = read_graph(kFixtures / "path5.edges", LaplacianKind::Standard);
  CHECK(path.size() == 5);
  CHECK(path.directed_edge_count() == 8);
  CHECK(detect_format(kFixtures / "grid4x4.mtx") == GraphFormat::MatrixMarket);
  const Graph grid = read_graph(kFixtures / "grid4x4.mtx", LaplacianKind::Normalized);
  CHECK(grid.size() == 16);
  CHECK(grid.directed_edge_count() == 48);
  const Graph weighted = read_graph(kFixtures / "weighted.edges", LaplacianKind::Standard,
                                    MetricKind::ShortestPathWeighted);
  CHECK(distance(weighted, 0, 3) == doctest::Approx(2.5));
  CHECK(distance(weighted, 0, 2) == doctest::Approx(3.0));
  const Graph geo = read_graph(kFixtures / "geometric60.edges", LaplacianKind::Standard);
  CHECK(geo.size() == 60);
  CHECK(is_connected(geo));
}

TEST_CASE("edge list round trip") {
  std::istringstream in("1 2 0.25\n2 3 4\n1 3 1\n");
  const EdgeListData data = parse_edge_list(in);
  std::stringstream out;
  write_edge_list(out, data);
  const EdgeListData back = parse_edge_list(out);
  REQUIRE(back.edges.size() == data.edges.size());
  for (std::size_t k = 0; k < data.edges.size(); ++k) {
    CHECK(back.edges[k].u == data.edges[k].u);
    CHECK(back.edges[k].v == data.edges[k].v);
    CHECK(back.edges[k].weight == data.edges[k].weight);
  }
}

TEST_CASE("signal CSV") {
  const auto path = scratch("signal.csv", "vertex,value\n2,-1.5\n1,0.25\n3,1e-3\n");
  const Signal x = read_signal_csv(path, 3);
  CHECK(x[0] == 0.25);
  CHECK(x[1] == -1.5);
  CHECK(x[2] == 1e-3);
  CHECK_THROWS_AS(read_signal_csv(path, 4), Error);
  CHECK_THROWS_AS(read_signal_csv(scratch("bad.csv", "1,abc\n"), 1), Error);
}
