#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/color_set.hpp"

namespace rainbow {

using Vertex = int;

struct Edge {
  Vertex u = 0;  // endpoints stored with u < v
  Vertex v = 0;
  ColorId color = 0;
};

// Edge with a caller-supplied integer label, not yet interned.
struct ColoredEdge {
  Vertex u = 0;
  Vertex v = 0;
  int label = 0;
};

// Edge with a free-form text label, as read from graph files.
struct LabeledEdge {
  Vertex u = 0;
  Vertex v = 0;
  std::string label;
};

// Simple undirected graph with one color per edge.  Immutable after
// construction.  Labels are interned to dense color ids 0..c-1 in first
// appearance order (edges scanned in the order given).  Construction rejects
// self-loops, duplicate edges, and out-of-range endpoints.
//
// For n <= 64 an adjacency bitmask per vertex is kept alongside the CSR
// lists; solvers use it for O(1) membership and intersection tests.
class EdgeColoredGraph {
 public:
  EdgeColoredGraph() = default;
  EdgeColoredGraph(int n, const std::vector<ColoredEdge>& edges);
  EdgeColoredGraph(int n, const std::vector<LabeledEdge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Number of distinct colors used on edges.
  int distinct_color_count() const { return color_count_; }

  // Edges sorted by (u, v).
  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;
  // Color of edge uv; uv must be an edge.
  ColorId edge_color(Vertex u, Vertex v) const;
  std::optional<ColorId> edge_color_opt(Vertex u, Vertex v) const;

  // Neighbors of v as (vertex, color), ascending by vertex.
  std::span<const std::pair<Vertex, ColorId>> neighbors(Vertex v) const;
  int degree(Vertex v) const;

  // Number of distinct colors on edges incident to v; 0 for isolated v.
  int color_degree(Vertex v) const;
  // Minimum color degree over all vertices; requires n >= 1.
  int min_color_degree() const;

  // Colors on edges incident to v, as a set.
  ColorSet incident_colors(Vertex v) const;

  // Original label for an interned color id.
  const std::string& color_label(ColorId c) const;

  // Bitmask of neighbors of v; only valid when vertex_count() <= 64.
  std::uint64_t adjacency_bits(Vertex v) const { return adj_bits_[v]; }
  bool has_adjacency_bits() const { return n_ <= 64; }

  // Bitmask of incident colors; only valid when distinct_color_count() <= 64.
  std::uint64_t incident_color_bits(Vertex v) const {
    return color_bits_[v];
  }
  bool has_color_bits() const { return color_count_ <= 64; }

 private:
  void build(int n, std::vector<Edge> edges);

  int n_ = 0;
  int color_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::pair<Vertex, ColorId>> adj_flat_;
  std::vector<int> adj_off_;
  std::vector<std::uint64_t> adj_bits_;
  std::vector<std::uint64_t> color_bits_;
  std::vector<ColorId> color_matrix_;  // n*n when n <= 64, -1 = non-edge
  std::vector<std::string> labels_;
};

// Path given as its vertex sequence (distinct vertices, consecutive pairs
// adjacent in the host graph).  Length is the edge count: one vertex has
// length 0.
struct VertexPath {
  std::vector<Vertex> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Cycle given as its vertex sequence without repeating the start (at least 3
// distinct vertices).  Length is the edge count, equal to the vertex count.
struct VertexCycle {
  std::vector<Vertex> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
};

// Structural validity against a host graph.
bool is_path_in(const EdgeColoredGraph& g, const VertexPath& p);
bool is_cycle_in(const EdgeColoredGraph& g, const VertexCycle& c);

// True when the edges of the sequence carry pairwise distinct colors.  The
// sequence must be structurally valid in g.
bool is_rainbow(const EdgeColoredGraph& g, const VertexPath& p);
bool is_rainbow(const EdgeColoredGraph& g, const VertexCycle& c);

// Colors on edges from u into the vertex set hood (u itself ignored).
ColorSet colors_between(const EdgeColoredGraph& g, Vertex u,
                        std::span<const Vertex> hood);

// Colors on the edges of a path/cycle.
ColorSet path_edge_colors(const EdgeColoredGraph& g, const VertexPath& p);
ColorSet cycle_edge_colors(const EdgeColoredGraph& g, const VertexCycle& c);

bool is_triangle_free(const EdgeColoredGraph& g);

// Canonical form: the path read from whichever end makes the vertex sequence
// lexicographically smaller.
VertexPath canonical_path(VertexPath p);
// Canonical form: among all rotations and the two directions, the vertex
// sequence starting at the smallest vertex that is lexicographically
// smallest.
VertexCycle canonical_cycle(VertexCycle c);

// Dash-joined vertex sequence, e.g. "0-4-2".
std::string to_string(const VertexPath& p);
std::string to_string(const VertexCycle& c);

}  // namespace rainbow
