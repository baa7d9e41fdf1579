#include "graph_pum/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace gpum {

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::int64_t parse_label(const std::string& token, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    parse_fail(line, "bad vertex label '" + token + "'");
  }
  if (value < 1) parse_fail(line, "vertex labels are 1-based");
  return value;
}

double parse_real(const std::string& token, std::size_t line) {
  try {
    std::size_t used = 0;
    double value = std::stod(token, &used);
    if (used != token.size()) parse_fail(line, "bad number '" + token + "'");
    return value;
  } catch (const std::logic_error&) {
    parse_fail(line, "bad number '" + token + "'");
  }
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::FileNotFound, "cannot open " + path.string());
  return in;
}

}  // namespace

EdgeListData parse_edge_list(std::istream& in) {
  EdgeListData data;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto pos = line.find_first_of("#%"); pos != std::string::npos) line.erase(pos);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() != 2 && tokens.size() != 3) {
      parse_fail(number, "expected 'i j [weight]'");
    }
    const auto i = parse_label(tokens[0], number);
    const auto j = parse_label(tokens[1], number);
    const double w = tokens.size() == 3 ? parse_real(tokens[2], number) : 1.0;
    data.vertex_count = std::max<Vertex>(data.vertex_count, std::max(i, j));
    data.edges.push_back({i - 1, j - 1, w});
  }
  return data;
}

EdgeListData parse_matrix_market(std::istream& in) {
  std::string line;
  std::size_t number = 1;
  if (!std::getline(in, line)) parse_fail(number, "empty MatrixMarket file");
  std::istringstream banner(lowercase(line));
  std::string tag, object, layout, field, symmetry;
  banner >> tag >> object >> layout >> field >> symmetry;
  if (tag != "%%matrixmarket" || object != "matrix" || layout != "coordinate") {
    parse_fail(number, "only '%%MatrixMarket matrix coordinate' is supported");
  }
  if (field != "real" && field != "integer" && field != "pattern") {
    parse_fail(number, "unsupported field '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric") {
    parse_fail(number, "unsupported symmetry '" + symmetry + "'");
  }
  const bool pattern = field == "pattern";

  std::int64_t rows = 0, cols = 0, entries = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line[0] == '%') continue;
    std::istringstream size(line);
    if (!(size >> rows >> cols >> entries)) parse_fail(number, "bad size line");
    break;
  }
  if (rows != cols || rows <= 0) parse_fail(number, "adjacency matrix must be square");

  EdgeListData data;
  data.vertex_count = rows;
  std::int64_t seen = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line[0] == '%') continue;
    std::istringstream fields(line);
    std::string si, sj, sw;
    if (!(fields >> si >> sj)) parse_fail(number, "bad entry");
    const auto i = parse_label(si, number);
    const auto j = parse_label(sj, number);
    double w = 1.0;
    if (!pattern) {
      if (!(fields >> sw)) parse_fail(number, "missing value");
      w = parse_real(sw, number);
    }
    if (i > rows || j > rows) parse_fail(number, "entry outside matrix");
    ++seen;
    if (i == j) continue;
    data.edges.push_back({i - 1, j - 1, w});
  }
  if (seen != entries) {
    parse_fail(number, "expected " + std::to_string(entries) + " entries, found " +
                           std::to_string(seen));
  }
  return data;
}

GraphFormat detect_format(const std::filesystem::path& path) {
  if (lowercase(path.extension().string()) == ".mtx") return GraphFormat::MatrixMarket;
  auto in = open(path);
  std::string first;
  std::getline(in, first);
  return lowercase(first).rfind("%%matrixmarket", 0) == 0 ? GraphFormat::MatrixMarket
                                                          : GraphFormat::EdgeList;
}

Graph read_graph(const std::filesystem::path& path, LaplacianKind kind,
                 MetricKind metric, GraphFormat format) {
  if (format == GraphFormat::Auto) format = detect_format(path);
  auto in = open(path);
  EdgeListData data = format == GraphFormat::MatrixMarket ? parse_matrix_market(in)
                                                          : parse_edge_list(in);
  return build_graph(data.vertex_count, data.edges, kind, metric);
}

Signal read_signal_csv(const std::filesystem::path& path, Vertex n) {
  auto in = open(path);
  Signal x = Signal::Constant(n, std::numeric_limits<double>::quiet_NaN());
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::string sv, sx;
    if (!(fields >> sv >> sx)) parse_fail(number, "expected 'vertex,value'");
    if (number == 1 && !std::isdigit(static_cast<unsigned char>(sv[0]))) continue;
    const auto v = parse_label(sv, number);
    if (v > n) parse_fail(number, "vertex label exceeds graph size");
    x[v - 1] = parse_real(sx, number);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!std::isfinite(x[v])) {
      fail(ErrorCode::ParseError, "signal file misses vertex " + std::to_string(v + 1));
    }
  }
  return x;
}

void write_edge_list(std::ostream& out, const EdgeListData& data) {
  out << "# " << data.vertex_count << " vertices, " << data.edges.size() << " edges\n";
  for (const auto& e : data.edges) {
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.weight << '\n';
  }
}

}  // namespace gpum
