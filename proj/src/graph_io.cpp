#include "rainbow/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace rainbow {

namespace {

// Returns the next content line, skipping blanks and '#' comments.
bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

EdgeColoredGraph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno))
    throw GraphFormatError(lineno == 0 ? 1 : lineno, "missing header");
  std::istringstream header(line);
  long long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0)
    throw GraphFormatError(lineno, "header must be 'n m' with n, m >= 0");
  std::string trailing;
  if (header >> trailing)
    throw GraphFormatError(lineno, "trailing tokens after header");

  std::vector<LabeledEdge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, lineno))
      throw GraphFormatError(lineno + 1, "expected " + std::to_string(m) +
                                             " edge lines, got " +
                                             std::to_string(i));
    std::istringstream es(line);
    long long u, v;
    std::string label;
    if (!(es >> u >> v >> label))
      throw GraphFormatError(lineno, "edge line must be 'u v label'");
    std::string extra;
    if (es >> extra)
      throw GraphFormatError(lineno, "trailing tokens after edge");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphFormatError(lineno, "endpoint out of range");
    if (u == v) throw GraphFormatError(lineno, "self-loop");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), label});
  }
  if (next_content_line(in, line, lineno))
    throw GraphFormatError(lineno, "unexpected content after edge list");
  try {
    return EdgeColoredGraph(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw GraphFormatError(lineno, e.what());
  }
}

EdgeColoredGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const EdgeColoredGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges())
    out << e.u << ' ' << e.v << ' ' << e.color << '\n';
}

std::string write_graph_string(const EdgeColoredGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void write_graph_file(const std::string& path, const EdgeColoredGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  write_graph(out, g);
  out.close();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace rainbow
