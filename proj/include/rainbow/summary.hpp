#pragma once

#include <string>
#include <vector>

#include "rainbow/report.hpp"

namespace rainbow {

struct SummaryOutput {
  std::string table;  // aligned text: counters, then per-bucket rows
  std::string csv;    // the bucket rows only, machine-readable
};

// Aggregates any number of reports: counts of items whose hypotheses held,
// whose conclusions were verified, unknown outcomes, and falsifications,
// plus the largest rainbow cycle recorded per minimum-color-degree bucket.
// All reports must carry the supported schema; a mismatch is refused with
// std::invalid_argument.  An empty input produces the zero-count table.
SummaryOutput emit_summary(const std::vector<Report>& reports);

}  // namespace rainbow
