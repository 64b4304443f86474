#include "rainbow/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace rainbow {

namespace {

// True when the color of edge (a, b) already occurs on consecutive edges of
// seq.  Linear scan on purpose: the oracle avoids the solver's incremental
// bookkeeping entirely.
bool color_seen_on(const EdgeColoredGraph& g, const std::vector<Vertex>& seq,
                   Vertex a, Vertex b) {
  const ColorId c = g.edge_color(a, b);
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (g.edge_color(seq[i - 1], seq[i]) == c) return true;
  return false;
}

bool contains(const std::vector<Vertex>& seq, Vertex v) {
  return std::find(seq.begin(), seq.end(), v) != seq.end();
}

void extend_paths(const EdgeColoredGraph& g, std::vector<Vertex>& seq,
                  std::vector<VertexPath>& out) {
  if (seq.size() == 1 || seq.front() < seq.back())
    out.push_back(VertexPath{seq});
  for (const auto& [w, c] : g.neighbors(seq.back())) {
    (void)c;
    if (contains(seq, w)) continue;
    if (color_seen_on(g, seq, seq.back(), w)) continue;
    seq.push_back(w);
    extend_paths(g, seq, out);
    seq.pop_back();
  }
}

void extend_cycles(const EdgeColoredGraph& g, std::vector<Vertex>& seq,
                   std::vector<VertexCycle>& out) {
  if (seq.size() >= 3 && seq[1] < seq.back() &&
      g.has_edge(seq.back(), seq.front()) &&
      !color_seen_on(g, seq, seq.back(), seq.front()))
    out.push_back(VertexCycle{seq});
  for (const auto& [w, c] : g.neighbors(seq.back())) {
    (void)c;
    if (w <= seq.front() || contains(seq, w)) continue;
    if (color_seen_on(g, seq, seq.back(), w)) continue;
    seq.push_back(w);
    extend_cycles(g, seq, out);
    seq.pop_back();
  }
}

}  // namespace

int OracleResult::longest_path_length() const {
  int best = 0;
  for (const VertexPath& p : paths) best = std::max(best, p.length());
  return best;
}

int OracleResult::longest_cycle_length() const {
  int best = 0;
  for (const VertexCycle& c : cycles) best = std::max(best, c.length());
  return best;
}

const VertexPath* OracleResult::best_path() const {
  const VertexPath* best = nullptr;
  for (const VertexPath& p : paths)
    if (!best || p.length() > best->length() ||
        (p.length() == best->length() && p.vertices < best->vertices))
      best = &p;
  return best;
}

const VertexCycle* OracleResult::best_cycle() const {
  const VertexCycle* best = nullptr;
  for (const VertexCycle& c : cycles)
    if (!best || c.length() > best->length() ||
        (c.length() == best->length() && c.vertices < best->vertices))
      best = &c;
  return best;
}

OracleResult oracle_enumerate(const EdgeColoredGraph& g) {
  if (g.vertex_count() > 10)
    throw std::invalid_argument("oracle_enumerate: limited to n <= 10");
  OracleResult r;
  std::vector<Vertex> seq;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    seq.assign(1, v);
    extend_paths(g, seq, r.paths);
    extend_cycles(g, seq, r.cycles);
  }
  auto path_key = [](const VertexPath& a, const VertexPath& b) {
    if (a.vertices.size() != b.vertices.size())
      return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  };
  auto cycle_key = [](const VertexCycle& a, const VertexCycle& b) {
    if (a.vertices.size() != b.vertices.size())
      return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  };
  std::sort(r.paths.begin(), r.paths.end(), path_key);
  std::sort(r.cycles.begin(), r.cycles.end(), cycle_key);
  return r;
}

}  // namespace rainbow
