#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

inline constexpr const char* kReportSchema = "rainbowlab.report.v1";

using KvList = std::vector<std::pair<std::string, std::string>>;

// First value stored under key, or nullptr.
const std::string* kv_find(const KvList& kvs, const std::string& key);

struct ReportFormatError : std::runtime_error {
  int line;
  ReportFormatError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

// Line-oriented experiment report.  Serialized order is fixed: schema line,
// config block, item blocks by index, summary block.  Keys are
// [a-z0-9._-]+; values are single-line ASCII.  Two equal reports serialize
// byte-identically, which the reproducibility tests rely on.
//
//   schema=rainbowlab.report.v1
//   config.command=solve
//   item.0.provenance=cycle:n=5
//   item.0.longest-cycle=5
//   summary.items=1
struct Report {
  std::string schema = kReportSchema;
  KvList config;
  std::vector<KvList> items;
  KvList summary;

  void add_config(const std::string& key, const std::string& value);
  // Appends a new empty item block and returns it.
  KvList& new_item();
  void add_summary(const std::string& key, const std::string& value);

  std::string str() const;
  void save(const std::string& path) const;

  // Strict parser; rejects unknown prefixes, bad keys, out-of-order or
  // non-contiguous item indices, and embedded blank lines.
  static Report parse(const std::string& text);
  static Report load(const std::string& path);
};

// Appends key=value to a block with the same key/value validation the
// Report mutators use.
void kv_add(KvList& kvs, const std::string& key, const std::string& value);

}  // namespace rainbow
