#include "rainbow/summary.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rainbow {

namespace {

int parse_int_or(const std::string& text, int fallback) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(text, &pos);
    return pos == text.size() ? v : fallback;
  } catch (const std::exception&) {
    return fallback;
  }
}

int witness_length(const std::string& dashed) {
  if (dashed.empty()) return 0;
  return static_cast<int>(std::count(dashed.begin(), dashed.end(), '-')) + 1;
}

struct Bucket {
  std::uint64_t items = 0;
  int max_cycle = -1;  // -1 = no cycle information in this bucket
};

}  // namespace

SummaryOutput emit_summary(const std::vector<Report>& reports) {
  for (const Report& r : reports)
    if (r.schema != kReportSchema)
      throw std::invalid_argument("unsupported report schema '" + r.schema +
                                  "'");

  std::uint64_t items = 0, hyp_ok = 0, verified = 0, unknown = 0,
                falsified = 0;
  std::map<int, Bucket> buckets;
  for (const Report& r : reports) {
    for (const KvList& item : r.items) {
      ++items;
      if (const auto* v = kv_find(item, "hypotheses-hold"); v && *v == "yes")
        ++hyp_ok;
      if (const auto* v = kv_find(item, "conclusion")) {
        if (*v == "yes") ++verified;
        if (*v == "unknown") ++unknown;
      }
      if (const auto* v = kv_find(item, "status");
          v && v->find("budget-exhausted") != std::string::npos)
        ++unknown;
      if (const auto* v = kv_find(item, "falsified"); v && *v == "1")
        ++falsified;
      if (const auto* dc = kv_find(item, "delta-c")) {
        Bucket& b = buckets[parse_int_or(*dc, 0)];
        ++b.items;
        int cyc = -1;
        if (const auto* lc = kv_find(item, "longest-cycle"))
          cyc = parse_int_or(*lc, -1);
        else if (const auto* w = kv_find(item, "cycle-witness"))
          cyc = witness_length(*w);
        b.max_cycle = std::max(b.max_cycle, cyc);
      }
    }
  }

  std::ostringstream table;
  table << "reports " << reports.size() << "\n";
  table << "items " << items << "\n";
  table << "hypotheses-satisfied " << hyp_ok << "\n";
  table << "verified " << verified << "\n";
  table << "unknown " << unknown << "\n";
  table << "falsified " << falsified << "\n";
  std::ostringstream csv;
  csv << "delta-c,items,max-cycle\n";
  if (!buckets.empty()) {
    table << "\n" << std::setw(7) << "delta-c" << "  " << std::setw(6)
          << "items" << "  " << std::setw(9) << "max-cycle" << "\n";
    for (const auto& [dc, b] : buckets) {
      table << std::setw(7) << dc << "  " << std::setw(6) << b.items << "  "
            << std::setw(9);
      if (b.max_cycle >= 0)
        table << b.max_cycle;
      else
        table << "-";
      table << "\n";
      csv << dc << "," << b.items << ",";
      if (b.max_cycle >= 0) csv << b.max_cycle;
      csv << "\n";
    }
  }
  return {table.str(), csv.str()};
}

}  // namespace rainbow
