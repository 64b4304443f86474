#pragma once

#include <cstdint>
#include <optional>

#include "rainbow/graph.hpp"

namespace rainbow {

// Resource cap for a search.  Node budgets are exact and deterministic: the
// expansion counter is compared against the cap every step.  Wall-clock caps
// are checked every 2^14 expansions, so overshoot is bounded but the set of
// nodes expanded under a pure node budget never depends on machine speed.
struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::int64_t> max_millis;

  static SearchBudget unlimited() { return {}; }
  static SearchBudget nodes(std::uint64_t n) { return {n, std::nullopt}; }
  bool is_unlimited() const { return !max_nodes && !max_millis; }
};

enum class TriState { yes, no, unknown };

const char* to_string(TriState t);

// Outcome of an optimizing search.  best_length is the best edge count found;
// complete means the search space was exhausted, so best_length is the true
// optimum.  Exactly one of best_path / best_cycle is set by the path / cycle
// solvers respectively whenever a witness exists (paths always have one: a
// single vertex is a length-0 path).  Witnesses are canonical: among all
// optimal solutions, the lexicographically smallest canonical vertex
// sequence.
struct SearchResult {
  int best_length = 0;
  std::optional<VertexPath> best_path;
  std::optional<VertexCycle> best_cycle;
  bool complete = false;
  std::uint64_t nodes_expanded = 0;
};

// Decision outcome with an optional witness; witness engaged iff yes.
struct DecisionResult {
  TriState verdict = TriState::unknown;
  std::optional<VertexPath> path_witness;
  std::optional<VertexCycle> cycle_witness;
  std::uint64_t nodes_expanded = 0;
};

// Longest rainbow path (edge count).  Requires n >= 1.  threads splits the
// root-level branches across workers; results and node counts are identical
// for every thread count.
SearchResult longest_rainbow_path(const EdgeColoredGraph& g,
                                  const SearchBudget& budget = {},
                                  int threads = 1);

// Longest rainbow cycle; best_length 0 with no witness when the graph has no
// rainbow cycle.  Requires n >= 3.
SearchResult longest_rainbow_cycle(const EdgeColoredGraph& g,
                                   const SearchBudget& budget = {},
                                   int threads = 1);

// Is there a rainbow cycle of length >= k?  Requires k >= 3.  Early-exits on
// the first witness; the reported witness is deterministic (first found in
// root-task order).  verdict unknown only on budget exhaustion.
DecisionResult has_rainbow_cycle_at_least(const EdgeColoredGraph& g, int k,
                                          const SearchBudget& budget = {},
                                          int threads = 1);

// Is there a rainbow path with at least len edges?  Requires len >= 0.
DecisionResult has_rainbow_path_at_least(const EdgeColoredGraph& g, int len,
                                         const SearchBudget& budget = {},
                                         int threads = 1);

// Rainbow 4-cycle detection by direct pair enumeration, independent of the
// DFS solvers.  Returns a witness or nullopt.  Never budgeted: O(n^2 d^2).
std::optional<VertexCycle> find_rainbow_c4(const EdgeColoredGraph& g);

// Certificates witness that a claim was established by a completed search.
// They cannot be constructed from raw data, only returned by the certifying
// functions below, so an instance is evidence the search actually ran to
// exhaustion.  Certificates hold a pointer to the host graph; the caller
// keeps the graph alive while certificates are in use.

class CertifiedLongestPath {
 public:
  const EdgeColoredGraph& graph() const { return *g_; }
  const VertexPath& path() const { return path_; }
  int length() const { return path_.length(); }
  std::uint64_t nodes_expanded() const { return nodes_; }

 private:
  friend std::optional<CertifiedLongestPath> certify_longest_rainbow_path(
      const EdgeColoredGraph&, const SearchBudget&, int);
  CertifiedLongestPath(const EdgeColoredGraph* g, VertexPath p,
                       std::uint64_t nodes)
      : g_(g), path_(std::move(p)), nodes_(nodes) {}
  const EdgeColoredGraph* g_;
  VertexPath path_;
  std::uint64_t nodes_;
};

struct NoCycleOutcome;

class CertifiedNoCycleAtLeast {
 public:
  const EdgeColoredGraph& graph() const { return *g_; }
  int k() const { return k_; }
  std::uint64_t nodes_expanded() const { return nodes_; }

 private:
  friend NoCycleOutcome certify_no_rainbow_cycle_at_least(
      const EdgeColoredGraph&, int, const SearchBudget&, int);
  friend std::optional<CertifiedNoCycleAtLeast>
  certificate_from_complete_cycle_search(const EdgeColoredGraph&,
                                         const SearchResult&, int);
  CertifiedNoCycleAtLeast(const EdgeColoredGraph* g, int k,
                          std::uint64_t nodes)
      : g_(g), k_(k), nodes_(nodes) {}
  const EdgeColoredGraph* g_;
  int k_;
  std::uint64_t nodes_;
};

class CertifiedRainbowC4Free {
 public:
  const EdgeColoredGraph& graph() const { return *g_; }

 private:
  friend std::optional<CertifiedRainbowC4Free> certify_rainbow_c4_free(
      const EdgeColoredGraph&);
  explicit CertifiedRainbowC4Free(const EdgeColoredGraph* g) : g_(g) {}
  const EdgeColoredGraph* g_;
};

// Completed longest-path search wrapped as a certificate; nullopt when the
// budget ran out first.
std::optional<CertifiedLongestPath> certify_longest_rainbow_path(
    const EdgeColoredGraph& g, const SearchBudget& budget = {},
    int threads = 1);

struct NoCycleOutcome {
  enum class Kind { certified, cycle_found, unknown };
  Kind kind = Kind::unknown;
  std::optional<CertifiedNoCycleAtLeast> certificate;  // kind == certified
  std::optional<VertexCycle> witness;                  // kind == cycle_found
  std::uint64_t nodes_expanded = 0;
};

// Establishes "no rainbow cycle of length >= k" by exhaustive search, or
// finds a countering cycle, or gives up on budget.  Requires k >= 3.
NoCycleOutcome certify_no_rainbow_cycle_at_least(const EdgeColoredGraph& g,
                                                 int k,
                                                 const SearchBudget& budget = {},
                                                 int threads = 1);

// Mints the same certificate from an already-completed longest-cycle search
// over the same graph, so one exhaustive search can certify every k above
// its optimum.  Returns nullopt if the search was incomplete, found a cycle
// of length >= k, or k < 3.
std::optional<CertifiedNoCycleAtLeast> certificate_from_complete_cycle_search(
    const EdgeColoredGraph& g, const SearchResult& completed_cycle_search,
    int k);

// Certifies the absence of rainbow 4-cycles; nullopt when one exists.
std::optional<CertifiedRainbowC4Free> certify_rainbow_c4_free(
    const EdgeColoredGraph& g);

}  // namespace rainbow
