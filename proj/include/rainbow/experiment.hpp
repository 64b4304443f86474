#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rainbow/report.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

// A fully described experiment.  Everything that affects report content
// lives here and is recorded in the report's config block, so a report can
// be reproduced from its own header.  Thread count and output path are
// execution details: they are excluded from the identity because results
// are thread-count-invariant.
struct ExperimentConfig {
  // solve | check-lemmas | eval-theorem | trace | hunt | compare | sweep
  std::string command;
  std::string input_path;  // graph file (exclusive with gen)
  std::string gen;         // GenSpec text (exclusive with input_path)
  std::optional<int> k;
  std::optional<int> s, t;     // restrict check-lemmas to one split
  std::string theorem;         // eval-theorem
  std::string sweep_action;    // check-lemmas | trace | cada2 | path-bounds
  SearchBudget budget;
  std::optional<std::uint64_t> seed;  // overrides the gen/sweep seed
  std::optional<int> n;               // compare; sweep size
  std::optional<int> delta_c;         // compare

  int threads = 1;
  std::string output_path;  // report also written here when set

  KvList to_config_lines() const;
  static ExperimentConfig from_config_lines(const KvList& lines);
};

struct ExperimentOutcome {
  Report report;
  // 0 completed; 2 some search hit its budget; 3 a certified violation of a
  // checked statement was found (the headline event).
  int exit_code = 0;
};

// Runs one experiment.  Throws std::invalid_argument for malformed
// configuration, GraphFormatError for malformed input files; the CLI maps
// both to exit 1.
ExperimentOutcome run_experiment(const ExperimentConfig& cfg);

}  // namespace rainbow
