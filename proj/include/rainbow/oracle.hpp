#pragma once

#include "rainbow/graph.hpp"

namespace rainbow {

// Exhaustive listing of every rainbow path and rainbow cycle of a small
// graph, produced by plain sequence enumeration with none of the solver's
// machinery (no bitmasks, no bounds, linear color scans).  Used to
// cross-check the optimizing searches.  Refuses graphs with more than 10
// vertices.
//
// Paths include the n single-vertex paths.  Sequences are canonical and each
// path/cycle appears exactly once, sorted by (length, vertex sequence).
struct OracleResult {
  std::vector<VertexPath> paths;
  std::vector<VertexCycle> cycles;

  int longest_path_length() const;   // >= 0 when n >= 1
  int longest_cycle_length() const;  // 0 when no rainbow cycle
  const VertexPath* best_path() const;    // canonical smallest among longest
  const VertexCycle* best_cycle() const;  // null when no rainbow cycle
};

OracleResult oracle_enumerate(const EdgeColoredGraph& g);

}  // namespace rainbow
