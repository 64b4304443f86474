#include "doctest.h"
#include "rainbow/oracle.hpp"

#include <set>
#include <stdexcept>

using namespace rainbow;

namespace {

EdgeColoredGraph k4_distinct() {
  std::vector<ColoredEdge> edges;
  int c = 0;
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) edges.push_back({u, v, c++});
  return EdgeColoredGraph(4, edges);
}

EdgeColoredGraph k4_proper() {
  return EdgeColoredGraph(4, std::vector<ColoredEdge>{
                                 {0, 1, 0}, {2, 3, 0},
                                 {0, 2, 1}, {1, 3, 1},
                                 {0, 3, 2}, {1, 2, 2}});
}

}  // namespace

// Hand-counted: 4 single vertices, 6 edges, 12 paths on three vertices, 12
// on four; 4 triangles and 3 four-cycles, everything rainbow because all six
// colors differ.
TEST_CASE("rainbow K4 path and cycle inventory") {
  OracleResult r = oracle_enumerate(k4_distinct());
  CHECK(r.paths.size() == 34);
  CHECK(r.cycles.size() == 7);
  CHECK(r.longest_path_length() == 3);
  CHECK(r.longest_cycle_length() == 4);
  REQUIRE(r.best_path() != nullptr);
  CHECK(r.best_path()->vertices == std::vector<Vertex>{0, 1, 2, 3});
  REQUIRE(r.best_cycle() != nullptr);
  CHECK(r.best_cycle()->vertices == std::vector<Vertex>{0, 1, 2, 3});
}

// Under the matching coloring every 4-vertex path repeats its end matching
// color, so no rainbow path uses all four vertices, and no 4-cycle survives.
TEST_CASE("properly colored K4 loses the long paths") {
  OracleResult r = oracle_enumerate(k4_proper());
  CHECK(r.paths.size() == 22);   // 4 + 6 + 12
  CHECK(r.cycles.size() == 4);   // the four triangles
  CHECK(r.longest_path_length() == 2);
  CHECK(r.longest_cycle_length() == 3);
}

TEST_CASE("triangle inventories") {
  EdgeColoredGraph rainbow3(3, std::vector<ColoredEdge>{
                                   {0, 1, 0}, {1, 2, 1}, {0, 2, 2}});
  OracleResult r = oracle_enumerate(rainbow3);
  CHECK(r.paths.size() == 9);  // 3 + 3 + 3
  CHECK(r.cycles.size() == 1);
  CHECK(r.cycles[0].vertices == std::vector<Vertex>{0, 1, 2});

  EdgeColoredGraph mono3(3, std::vector<ColoredEdge>{
                                {0, 1, 5}, {1, 2, 5}, {0, 2, 5}});
  OracleResult m = oracle_enumerate(mono3);
  CHECK(m.paths.size() == 6);  // two same-color edges never chain
  CHECK(m.cycles.empty());
  CHECK(m.longest_path_length() == 1);
  CHECK(m.longest_cycle_length() == 0);
  CHECK(m.best_cycle() == nullptr);
}

TEST_CASE("degenerate graphs") {
  OracleResult empty = oracle_enumerate(EdgeColoredGraph());
  CHECK(empty.paths.empty());
  CHECK(empty.cycles.empty());
  CHECK(empty.best_path() == nullptr);

  OracleResult isolated =
      oracle_enumerate(EdgeColoredGraph(3, std::vector<ColoredEdge>{}));
  CHECK(isolated.paths.size() == 3);  // the single-vertex paths
  CHECK(isolated.longest_path_length() == 0);
  REQUIRE(isolated.best_path() != nullptr);
  CHECK(isolated.best_path()->vertices == std::vector<Vertex>{0});
}

TEST_CASE("oracle refuses big graphs") {
  CHECK_THROWS_AS(
      oracle_enumerate(EdgeColoredGraph(11, std::vector<ColoredEdge>{})),
      std::invalid_argument);
  CHECK_NOTHROW(
      oracle_enumerate(EdgeColoredGraph(10, std::vector<ColoredEdge>{})));
}

TEST_CASE("listings are canonical, unique and sorted") {
  OracleResult r = oracle_enumerate(k4_distinct());
  std::set<std::vector<Vertex>> seen_paths;
  for (std::size_t i = 0; i < r.paths.size(); ++i) {
    const auto& p = r.paths[i];
    CHECK(is_path_in(k4_distinct(), p));
    CHECK(canonical_path(p).vertices == p.vertices);
    CHECK(seen_paths.insert(p.vertices).second);
    if (i) {
      const auto& q = r.paths[i - 1];
      CHECK((q.vertices.size() < p.vertices.size() ||
             (q.vertices.size() == p.vertices.size() &&
              q.vertices < p.vertices)));
    }
  }
  std::set<std::vector<Vertex>> seen_cycles;
  for (const auto& c : r.cycles) {
    CHECK(canonical_cycle(c).vertices == c.vertices);
    CHECK(seen_cycles.insert(c.vertices).second);
  }
}
