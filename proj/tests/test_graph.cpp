#include "doctest.h"
#include "rainbow/graph.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

using namespace rainbow;

namespace {

// K4 under a proper 3-coloring: the three perfect matchings get one color
// each.
EdgeColoredGraph proper_k4() {
  return EdgeColoredGraph(4, std::vector<ColoredEdge>{
                                 {0, 1, 0},
                                 {2, 3, 0},
                                 {0, 2, 1},
                                 {1, 3, 1},
                                 {0, 3, 2},
                                 {1, 2, 2},
                             });
}

}  // namespace

TEST_CASE("construction rejects malformed edge lists") {
  CHECK_THROWS_AS(EdgeColoredGraph(2, std::vector<ColoredEdge>{{0, 0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(EdgeColoredGraph(2, std::vector<ColoredEdge>{{0, 2, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(EdgeColoredGraph(2, std::vector<ColoredEdge>{{-1, 0, 1}}),
                  std::invalid_argument);
  // duplicates rejected in either orientation
  CHECK_THROWS_AS(
      EdgeColoredGraph(3, std::vector<ColoredEdge>{{0, 1, 1}, {1, 0, 2}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      EdgeColoredGraph(3, std::vector<ColoredEdge>{{0, 1, 1}, {0, 1, 1}}),
      std::invalid_argument);
  CHECK_THROWS_AS(EdgeColoredGraph(-1, std::vector<ColoredEdge>{}),
                  std::invalid_argument);
}

TEST_CASE("labels intern in first-appearance order") {
  EdgeColoredGraph g(4, std::vector<LabeledEdge>{
                            {0, 1, "red"},
                            {1, 2, "blue"},
                            {2, 3, "red"},
                            {0, 3, "green"},
                        });
  CHECK(g.distinct_color_count() == 3);
  CHECK(g.color_label(0) == "red");
  CHECK(g.color_label(1) == "blue");
  CHECK(g.color_label(2) == "green");
  CHECK(g.edge_color(0, 1) == 0);
  CHECK(g.edge_color(2, 3) == 0);
  CHECK(g.edge_color(1, 2) == 1);
  CHECK(g.edge_color(0, 3) == 2);
  CHECK_THROWS_AS(g.color_label(3), std::invalid_argument);
}

TEST_CASE("adjacency queries are orientation-free") {
  EdgeColoredGraph g = proper_k4();
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 6);
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(3, 1));
  CHECK(g.edge_color(3, 1) == 1);
  CHECK_FALSE(g.has_edge(0, 0));
  CHECK(g.edge_color_opt(1, 3).has_value());

  EdgeColoredGraph path(3, std::vector<ColoredEdge>{{0, 1, 5}, {1, 2, 6}});
  CHECK_FALSE(path.edge_color_opt(0, 2).has_value());
  CHECK_THROWS_AS(path.edge_color(0, 2), std::invalid_argument);

  // neighbor lists ascend by vertex
  auto nb = g.neighbors(2);
  REQUIRE(nb.size() == 3);
  CHECK(nb[0].first == 0);
  CHECK(nb[1].first == 1);
  CHECK(nb[2].first == 3);
  CHECK(nb[1].second == g.edge_color(1, 2));
  CHECK(g.degree(2) == 3);

  // edges() sorted by (u, v) with u < v
  auto es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    CHECK(es[i].u < es[i].v);
    if (i) CHECK((es[i - 1].u < es[i].u ||
                  (es[i - 1].u == es[i].u && es[i - 1].v < es[i].v)));
  }
}

TEST_CASE("color degree counts distinct incident colors") {
  EdgeColoredGraph g = proper_k4();
  for (Vertex v = 0; v < 4; ++v) CHECK(g.color_degree(v) == 3);
  CHECK(g.min_color_degree() == 3);

  EdgeColoredGraph mono(3, std::vector<ColoredEdge>{
                               {0, 1, 7}, {1, 2, 7}, {0, 2, 7}});
  CHECK(mono.min_color_degree() == 1);
  CHECK(mono.distinct_color_count() == 1);

  EdgeColoredGraph lonely(2, std::vector<ColoredEdge>{});
  CHECK(lonely.color_degree(0) == 0);
  CHECK(lonely.min_color_degree() == 0);

  EdgeColoredGraph empty;
  CHECK_THROWS_AS(empty.min_color_degree(), std::invalid_argument);

  ColorSet inc = g.incident_colors(0);
  CHECK(inc.size() == 3);
  CHECK(inc.contains(0));
  CHECK(inc.contains(1));
  CHECK(inc.contains(2));
}

TEST_CASE("bitmask mirrors match the list representation") {
  EdgeColoredGraph g = proper_k4();
  REQUIRE(g.has_adjacency_bits());
  REQUIRE(g.has_color_bits());
  for (Vertex v = 0; v < 4; ++v) {
    CHECK(std::popcount(g.adjacency_bits(v)) == g.degree(v));
    CHECK(std::popcount(g.incident_color_bits(v)) == g.color_degree(v));
    for (Vertex u = 0; u < 4; ++u)
      CHECK(bool(g.adjacency_bits(v) >> u & 1) == g.has_edge(v, u));
  }
}

TEST_CASE("path and cycle validity") {
  EdgeColoredGraph g = proper_k4();
  CHECK(is_path_in(g, VertexPath{{0, 1, 3}}));
  CHECK(is_path_in(g, VertexPath{{2}}));
  CHECK_FALSE(is_path_in(g, VertexPath{{0, 1, 0}}));   // repeats a vertex
  CHECK_FALSE(is_path_in(g, VertexPath{{}}));          // empty sequence
  CHECK(is_cycle_in(g, VertexCycle{{0, 1, 2}}));
  CHECK(is_cycle_in(g, VertexCycle{{0, 1, 2, 3}}));
  CHECK_FALSE(is_cycle_in(g, VertexCycle{{0, 1}}));    // too short

  EdgeColoredGraph path(3, std::vector<ColoredEdge>{{0, 1, 0}, {1, 2, 1}});
  CHECK_FALSE(is_cycle_in(path, VertexCycle{{0, 1, 2}}));  // 0-2 missing
}

TEST_CASE("rainbow means pairwise distinct edge colors") {
  EdgeColoredGraph g = proper_k4();
  CHECK(is_rainbow(g, VertexPath{{0, 1, 2}}));   // colors 0,2
  CHECK(is_rainbow(g, VertexPath{{3}}));         // no edges at all
  // 0-1 and 2-3 share the matching color
  CHECK_FALSE(is_rainbow(g, VertexPath{{0, 1, 3, 2}}));
  CHECK(is_rainbow(g, VertexCycle{{0, 1, 2}}));  // a rainbow triangle
  CHECK_FALSE(is_rainbow(g, VertexCycle{{0, 1, 2, 3}}));  // two colors twice
  CHECK_THROWS_AS(is_rainbow(g, VertexPath{{0, 1, 0}}), std::invalid_argument);
}

TEST_CASE("colors_between collects colors into a vertex set") {
  EdgeColoredGraph g = proper_k4();
  std::vector<Vertex> hood{1, 2};
  ColorSet s = colors_between(g, 0, hood);
  CHECK(s.size() == 2);
  CHECK(s.contains(g.edge_color(0, 1)));
  CHECK(s.contains(g.edge_color(0, 2)));
  CHECK_FALSE(s.contains(g.edge_color(0, 3)));

  std::vector<Vertex> self{0, 3};
  ColorSet t = colors_between(g, 0, self);  // 0 itself is skipped
  CHECK(t.size() == 1);
  CHECK(t.contains(g.edge_color(0, 3)));

  ColorSet pc = path_edge_colors(g, VertexPath{{0, 1, 2}});
  CHECK(pc.size() == 2);
  ColorSet cc = cycle_edge_colors(g, VertexCycle{{0, 1, 2}});
  CHECK(cc.size() == 3);
}

TEST_CASE("triangle detection") {
  CHECK_FALSE(is_triangle_free(proper_k4()));
  EdgeColoredGraph c5(5, std::vector<ColoredEdge>{
                             {0, 1, 0}, {1, 2, 1}, {2, 3, 2},
                             {3, 4, 3}, {0, 4, 4}});
  CHECK(is_triangle_free(c5));
  CHECK(is_triangle_free(EdgeColoredGraph(3, std::vector<ColoredEdge>{})));
}

TEST_CASE("canonical forms pick the smaller reading") {
  CHECK(canonical_path(VertexPath{{2, 1, 0}}).vertices ==
        std::vector<Vertex>{0, 1, 2});
  CHECK(canonical_path(VertexPath{{0, 4, 2}}).vertices ==
        std::vector<Vertex>{0, 4, 2});
  CHECK(canonical_path(VertexPath{{2, 4, 0}}).vertices ==
        std::vector<Vertex>{0, 4, 2});
  CHECK(canonical_path(VertexPath{{3}}).vertices == std::vector<Vertex>{3});

  CHECK(canonical_cycle(VertexCycle{{2, 0, 1}}).vertices ==
        std::vector<Vertex>{0, 1, 2});
  CHECK(canonical_cycle(VertexCycle{{3, 2, 1, 0}}).vertices ==
        std::vector<Vertex>{0, 1, 2, 3});
  // both rotations and reflections considered: 0-3-1-2 reversed is 0-2-1-3
  CHECK(canonical_cycle(VertexCycle{{3, 1, 2, 0}}).vertices ==
        std::vector<Vertex>{0, 2, 1, 3});

  CHECK(to_string(VertexPath{{0, 4, 2}}) == "0-4-2");
  CHECK(to_string(VertexCycle{{0, 1, 2}}) == "0-1-2");
  CHECK(to_string(VertexPath{{7}}) == "7");
}
