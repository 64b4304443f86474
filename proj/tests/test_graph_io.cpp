#include "doctest.h"
#include "rainbow/graph_io.hpp"

#include <cstdio>
#include <sstream>

using namespace rainbow;

namespace {

EdgeColoredGraph parse(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

int error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const GraphFormatError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("graph text round-trips through write and read") {
  EdgeColoredGraph g(4, std::vector<LabeledEdge>{
                            {3, 0, "x"},
                            {1, 2, "y"},
                            {0, 1, "x"},
                        });
  std::string text = write_graph_string(g);
  // writer emits interned ids and sorts edges by (u, v)
  CHECK(text == "4 3\n0 1 0\n0 3 0\n1 2 1\n");
  EdgeColoredGraph h = parse(text);
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 3);
  CHECK(h.edge_color(0, 1) == h.edge_color(0, 3));
  CHECK(h.edge_color(0, 1) != h.edge_color(1, 2));
  CHECK(write_graph_string(h) == text);
}

TEST_CASE("comments and blank lines are ignored") {
  EdgeColoredGraph g = parse(
      "# a remark\n"
      "\n"
      "3 2\n"
      "  # indented remark\n"
      "0 1 red\n"
      "\n"
      "1 2 blue\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);

  CHECK(parse("0 0\n").vertex_count() == 0);
  CHECK(parse("2 0\n# nothing else\n").edge_count() == 0);
}

TEST_CASE("free-form labels merge by text") {
  EdgeColoredGraph g = parse("3 3\n0 1 alpha\n1 2 beta\n0 2 alpha\n");
  CHECK(g.distinct_color_count() == 2);
  CHECK(g.edge_color(0, 1) == g.edge_color(0, 2));
  CHECK(g.color_label(g.edge_color(1, 2)) == "beta");
}

TEST_CASE("parse errors carry 1-based line numbers") {
  CHECK(error_line("") == 1);                      // missing header
  CHECK(error_line("# only a comment\n") == 1);
  CHECK(error_line("pancake\n") == 1);             // not 'n m'
  CHECK(error_line("3\n") == 1);                   // missing m
  CHECK(error_line("-1 0\n") == 1);                // negative count
  CHECK(error_line("3 1 extra\n") == 1);           // trailing header token
  CHECK(error_line("3 2\n0 1 a\n") == 3);          // fewer edges than stated
  CHECK(error_line("3 1\n0 1\n") == 2);            // edge missing its label
  CHECK(error_line("3 1\n0 1 a b\n") == 2);        // trailing edge token
  CHECK(error_line("3 1\n0 3 a\n") == 2);          // endpoint out of range
  CHECK(error_line("3 1\n2 2 a\n") == 2);          // self-loop
  CHECK(error_line("3 1\n0 1 a\n0 2 b\n") == 3);   // more lines than stated
  CHECK(error_line("# pad\n3 1\n1 1 a\n") == 3);   // counts comment lines
  // duplicate edge surfaces as a format error on the last consumed line
  CHECK(error_line("3 2\n0 1 a\n1 0 b\n") == 3);
}

TEST_CASE("file round-trip") {
  // ids are renumbered in first-appearance order of the sorted edge list,
  // so one write+read reaches a fixed point while preserving the coloring
  EdgeColoredGraph g(5, std::vector<ColoredEdge>{
                            {0, 1, 0}, {1, 2, 1}, {2, 3, 2},
                            {3, 4, 3}, {0, 4, 4}});
  std::string path = "tmp_graph_io_roundtrip.txt";
  write_graph_file(path, g);
  EdgeColoredGraph h = read_graph_file(path);
  CHECK(h.edge_count() == g.edge_count());
  CHECK(h.vertex_count() == g.vertex_count());
  for (Vertex v = 0; v < 5; ++v) CHECK(h.color_degree(v) == g.color_degree(v));
  write_graph_file(path, h);
  EdgeColoredGraph h2 = read_graph_file(path);
  CHECK(write_graph_string(h2) == write_graph_string(h));
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_graph_file("does_not_exist_anywhere.txt"),
                  std::runtime_error);
}
