#include "rainbow/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace rainbow {

namespace {

void check_endpoints(int n, Vertex u, Vertex v) {
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop rejected");
}

}  // namespace

EdgeColoredGraph::EdgeColoredGraph(int n,
                                   const std::vector<ColoredEdge>& edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::vector<Edge> interned;
  interned.reserve(edges.size());
  // Dense interning of integer labels in first appearance order.  The common
  // generator path already emits 0..q-1 labels; keep that fast with a direct
  // table and fall back to a map for sparse labels.
  std::vector<ColorId> direct;
  std::unordered_map<int, ColorId> sparse;
  int next_id = 0;
  for (const ColoredEdge& e : edges) {
    check_endpoints(n, e.u, e.v);
    ColorId id;
    if (e.label >= 0 && e.label < 4096) {
      if (static_cast<std::size_t>(e.label) >= direct.size())
        direct.resize(e.label + 1, -1);
      if (direct[e.label] < 0) direct[e.label] = next_id++;
      id = direct[e.label];
    } else {
      auto [it, fresh] = sparse.try_emplace(e.label, next_id);
      if (fresh) ++next_id;
      id = it->second;
    }
    Vertex a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    interned.push_back({a, b, id});
  }
  color_count_ = next_id;
  labels_.resize(next_id);
  for (std::size_t i = 0; i < direct.size(); ++i)
    if (direct[i] >= 0) labels_[direct[i]] = std::to_string(i);
  for (const auto& [label, id] : sparse) labels_[id] = std::to_string(label);
  build(n, std::move(interned));
}

EdgeColoredGraph::EdgeColoredGraph(int n,
                                   const std::vector<LabeledEdge>& edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::vector<Edge> interned;
  interned.reserve(edges.size());
  std::unordered_map<std::string, ColorId> ids;
  for (const LabeledEdge& e : edges) {
    check_endpoints(n, e.u, e.v);
    auto [it, fresh] = ids.try_emplace(e.label, static_cast<ColorId>(labels_.size()));
    if (fresh) labels_.push_back(e.label);
    Vertex a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    interned.push_back({a, b, it->second});
  }
  color_count_ = static_cast<int>(labels_.size());
  build(n, std::move(interned));
}

void EdgeColoredGraph::build(int n, std::vector<Edge> edges) {
  n_ = n;
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
      throw std::invalid_argument("duplicate edge rejected");
  edges_ = std::move(edges);

  std::vector<int> deg(n, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  adj_off_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) adj_off_[v + 1] = adj_off_[v] + deg[v];
  adj_flat_.resize(edges_.size() * 2);
  std::vector<int> cursor(adj_off_.begin(), adj_off_.end() - 1);
  for (const Edge& e : edges_) {
    adj_flat_[cursor[e.u]++] = {e.v, e.color};
    adj_flat_[cursor[e.v]++] = {e.u, e.color};
  }
  for (int v = 0; v < n; ++v)
    std::sort(adj_flat_.begin() + adj_off_[v], adj_flat_.begin() + adj_off_[v + 1]);

  if (n_ <= 64) {
    adj_bits_.assign(n, 0);
    color_matrix_.assign(static_cast<std::size_t>(n) * n, -1);
    for (const Edge& e : edges_) {
      adj_bits_[e.u] |= std::uint64_t{1} << e.v;
      adj_bits_[e.v] |= std::uint64_t{1} << e.u;
      color_matrix_[static_cast<std::size_t>(e.u) * n + e.v] = e.color;
      color_matrix_[static_cast<std::size_t>(e.v) * n + e.u] = e.color;
    }
  }
  if (color_count_ <= 64) {
    color_bits_.assign(n, 0);
    for (const Edge& e : edges_) {
      color_bits_[e.u] |= std::uint64_t{1} << e.color;
      color_bits_[e.v] |= std::uint64_t{1} << e.color;
    }
  }
}

bool EdgeColoredGraph::has_edge(Vertex u, Vertex v) const {
  return edge_color_opt(u, v).has_value();
}

std::optional<ColorId> EdgeColoredGraph::edge_color_opt(Vertex u,
                                                       Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return std::nullopt;
  if (n_ <= 64) {
    ColorId c = color_matrix_[static_cast<std::size_t>(u) * n_ + v];
    if (c < 0) return std::nullopt;
    return c;
  }
  auto begin = adj_flat_.begin() + adj_off_[u];
  auto end = adj_flat_.begin() + adj_off_[u + 1];
  auto it = std::lower_bound(begin, end, v, [](const auto& p, Vertex w) {
    return p.first < w;
  });
  if (it == end || it->first != v) return std::nullopt;
  return it->second;
}

ColorId EdgeColoredGraph::edge_color(Vertex u, Vertex v) const {
  auto c = edge_color_opt(u, v);
  if (!c) throw std::invalid_argument("edge_color: not an edge");
  return *c;
}

std::span<const std::pair<Vertex, ColorId>> EdgeColoredGraph::neighbors(
    Vertex v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  return {adj_flat_.data() + adj_off_[v],
          static_cast<std::size_t>(adj_off_[v + 1] - adj_off_[v])};
}

int EdgeColoredGraph::degree(Vertex v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  return adj_off_[v + 1] - adj_off_[v];
}

int EdgeColoredGraph::color_degree(Vertex v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  if (color_count_ <= 64) return std::popcount(color_bits_[v]);
  return incident_colors(v).size();
}

int EdgeColoredGraph::min_color_degree() const {
  if (n_ < 1) throw std::invalid_argument("min_color_degree: empty graph");
  int best = color_degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, color_degree(v));
  return best;
}

ColorSet EdgeColoredGraph::incident_colors(Vertex v) const {
  ColorSet s;
  for (const auto& [w, c] : neighbors(v)) {
    (void)w;
    s.insert(c);
  }
  return s;
}

const std::string& EdgeColoredGraph::color_label(ColorId c) const {
  if (c < 0 || c >= color_count_)
    throw std::invalid_argument("color id out of range");
  return labels_[c];
}

bool is_path_in(const EdgeColoredGraph& g, const VertexPath& p) {
  if (p.vertices.empty()) return false;
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex v : p.vertices) {
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 1; i < p.vertices.size(); ++i)
    if (!g.has_edge(p.vertices[i - 1], p.vertices[i])) return false;
  return true;
}

bool is_cycle_in(const EdgeColoredGraph& g, const VertexCycle& c) {
  if (c.vertices.size() < 3) return false;
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex v : c.vertices) {
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    Vertex a = c.vertices[i];
    Vertex b = c.vertices[(i + 1) % c.vertices.size()];
    if (!g.has_edge(a, b)) return false;
  }
  return true;
}

bool is_rainbow(const EdgeColoredGraph& g, const VertexPath& p) {
  if (!is_path_in(g, p)) throw std::invalid_argument("is_rainbow: not a path in g");
  ColorSet seen;
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    ColorId c = g.edge_color(p.vertices[i - 1], p.vertices[i]);
    if (seen.contains(c)) return false;
    seen.insert(c);
  }
  return true;
}

bool is_rainbow(const EdgeColoredGraph& g, const VertexCycle& cyc) {
  if (!is_cycle_in(g, cyc))
    throw std::invalid_argument("is_rainbow: not a cycle in g");
  ColorSet seen;
  for (std::size_t i = 0; i < cyc.vertices.size(); ++i) {
    Vertex a = cyc.vertices[i];
    Vertex b = cyc.vertices[(i + 1) % cyc.vertices.size()];
    ColorId c = g.edge_color(a, b);
    if (seen.contains(c)) return false;
    seen.insert(c);
  }
  return true;
}

ColorSet colors_between(const EdgeColoredGraph& g, Vertex u,
                        std::span<const Vertex> hood) {
  ColorSet s;
  for (Vertex w : hood) {
    if (w == u) continue;
    if (auto c = g.edge_color_opt(u, w)) s.insert(*c);
  }
  return s;
}

ColorSet path_edge_colors(const EdgeColoredGraph& g, const VertexPath& p) {
  ColorSet s;
  for (std::size_t i = 1; i < p.vertices.size(); ++i)
    s.insert(g.edge_color(p.vertices[i - 1], p.vertices[i]));
  return s;
}

ColorSet cycle_edge_colors(const EdgeColoredGraph& g, const VertexCycle& c) {
  ColorSet s;
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    s.insert(g.edge_color(c.vertices[i],
                          c.vertices[(i + 1) % c.vertices.size()]));
  return s;
}

bool is_triangle_free(const EdgeColoredGraph& g) {
  if (g.has_adjacency_bits()) {
    for (const Edge& e : g.edges())
      if (g.adjacency_bits(e.u) & g.adjacency_bits(e.v)) return false;
    return true;
  }
  for (const Edge& e : g.edges()) {
    auto nu = g.neighbors(e.u);
    auto nv = g.neighbors(e.v);
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i].first == nv[j].first) return false;
      if (nu[i].first < nv[j].first)
        ++i;
      else
        ++j;
    }
  }
  return true;
}

VertexPath canonical_path(VertexPath p) {
  if (p.vertices.size() >= 2 && p.vertices.back() < p.vertices.front())
    std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

VertexCycle canonical_cycle(VertexCycle c) {
  if (c.vertices.size() < 3) return c;
  auto rotate_to_min = [](std::vector<Vertex> v) {
    auto mn = std::min_element(v.begin(), v.end());
    std::rotate(v.begin(), mn, v.end());
    return v;
  };
  std::vector<Vertex> fwd = rotate_to_min(c.vertices);
  std::reverse(c.vertices.begin(), c.vertices.end());
  std::vector<Vertex> rev = rotate_to_min(c.vertices);
  c.vertices = std::min(fwd, rev);
  return c;
}

namespace {

std::string join_dashed(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const VertexPath& p) { return join_dashed(p.vertices); }

std::string to_string(const VertexCycle& c) { return join_dashed(c.vertices); }

}  // namespace rainbow
