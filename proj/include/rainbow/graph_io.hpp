#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rainbow/graph.hpp"

namespace rainbow {

// Parse failure for the graph text format; line is 1-based.
class GraphFormatError : public std::runtime_error {
 public:
  GraphFormatError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format:
//   # comment lines and blank lines are ignored
//   n m
//   u v label     (m edge lines; label is any non-empty token)
// Vertices are 0-based.  The writer renders labels as the interned color ids
// in decimal, and emits edges sorted by (u, v).
EdgeColoredGraph read_graph(std::istream& in);
EdgeColoredGraph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const EdgeColoredGraph& g);
std::string write_graph_string(const EdgeColoredGraph& g);
void write_graph_file(const std::string& path, const EdgeColoredGraph& g);

}  // namespace rainbow
