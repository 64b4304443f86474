#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

// Statements under mechanical test.  LiWang, Cada2, Das, ChenLi and Broersma
// are published results by other groups; Main, Main2 and Cor9 are this
// toolkit's subject statements; Conjecture marks hunt output only and is not
// accepted by evaluate_theorem.
enum class TheoremId {
  LiWang,
  Cada2,
  Das,
  ChenLi,
  Main,
  Main2,
  Cor9,
  Broersma,
  Conjecture,
};

const char* to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(const std::string& name);

struct HypothesisCheck {
  std::string name;
  TriState status = TriState::unknown;
  std::string detail;
};

// Outcome of evaluating one statement on one graph.  conclusion meanings:
// yes = a witness of at least the guaranteed size was found; no = a completed
// exhaustive search proves no such witness exists (with hypotheses holding
// this refutes the statement); unknown = budget ran out.  falsified() is the
// headline condition: hypotheses certified true and conclusion certified
// false on a proved statement.
struct TheoremReport {
  TheoremId id = TheoremId::Cada2;
  int n = 0;
  int m = 0;
  int colors = 0;
  int delta_c = 0;
  std::optional<int> k;
  std::vector<HypothesisCheck> hypotheses;
  std::vector<HypothesisCheck> notes;  // informational, not gating
  TriState hypotheses_hold = TriState::unknown;
  Rational bound;          // the guaranteed quantity, exact
  int target_length = 0;   // integer search target implied by bound
  TriState conclusion = TriState::unknown;
  std::optional<VertexPath> path_witness;
  std::optional<VertexCycle> cycle_witness;
  std::uint64_t nodes_expanded = 0;

  bool falsified() const {
    return id != TheoremId::Conjecture && hypotheses_hold == TriState::yes &&
           conclusion == TriState::no;
  }
};

// Evaluates hypotheses exactly (rational thresholds, certified structural
// predicates) and then checks the conclusion with the exact solvers.  The
// budget applies to each internal search invocation separately.  k is
// required for Main, Main2 and Cor9; Main and Main2 require k >= 5 as part
// of their statements.  Hypothesis evaluation runs regardless of whether the
// hypotheses hold; the conclusion search runs always (a conclusion may hold
// vacuously interestingly), except when the graph is too small to search.
TheoremReport evaluate_theorem(TheoremId id, const EdgeColoredGraph& g,
                               std::optional<int> k = std::nullopt,
                               const SearchBudget& budget = {},
                               int threads = 1);

// One conjecture counterexample candidate: hypotheses hold and a completed
// search found no rainbow cycle of length >= k.  Carries the serialized
// graph for independent re-verification.
struct HuntCandidate {
  std::string provenance;
  std::string graph_text;
  EdgeColoredGraph graph;
  TheoremReport report;
};

struct HuntOutcome {
  std::uint64_t scanned = 0;    // stream items consumed
  std::uint64_t eligible = 0;   // met the color-degree hypothesis
  std::uint64_t verified = 0;   // rainbow cycle >= k found
  std::uint64_t unknown = 0;    // budget exhausted, dropped
  std::vector<HuntCandidate> candidates;  // sorted by graph_text
};

// Streams graphs, keeps those with delta_c >= (n+k)/2, and exhaustively
// searches each for a rainbow cycle of length >= k.  Requires k >= 4.
HuntOutcome hunt_conjecture(GraphStream& stream, int k,
                            const SearchBudget& per_instance = {},
                            int threads = 1);

// Arithmetic comparison of the two cycle-length guarantees at a given
// (n, delta_c, k), carried out entirely in exact rationals.
//
// liwang_bound is the literal expression delta_c - 3n/4 + 2.  main_max_k is
// the largest k' with delta_c >= (n+3k'-2)/2.  When delta_c equals
// ceil((n+3k-2)/2) the record also evaluates the published per-parity closed
// form for the first guarantee at that threshold and its gap to k; the
// closed form differs from the literal expression by a constant, so both are
// recorded side by side.
struct GuaranteeComparison {
  int n = 0;
  int delta_c = 0;
  int k = 0;
  Rational liwang_threshold;      // 3n/4 + 1
  bool liwang_applicable = false; // delta_c >= threshold
  Rational liwang_bound;          // delta_c - 3n/4 + 2 (0 when inapplicable)
  bool k_below_liwang_range = false;  // k < (n+6)/6
  int main_max_k = 0;             // floor((2 delta_c - n + 2)/3)
  bool main_applicable = false;   // main_max_k >= 5
  Rational difference;            // main_max_k - liwang_bound
  bool at_threshold = false;      // delta_c == ceil((n+3k-2)/2)
  std::string parity;             // "odd"/"even" of n+3k when at_threshold
  Rational at_threshold_liwang_bound;  // published closed form
  Rational at_threshold_gap;           // k - at_threshold_liwang_bound
};

GuaranteeComparison compare_guarantees(int n, int delta_c, int k);

}  // namespace rainbow
