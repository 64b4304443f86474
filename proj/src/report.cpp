#include "rainbow/report.hpp"

#include <fstream>
#include <sstream>

namespace rainbow {

const std::string* kv_find(const KvList& kvs, const std::string& key) {
  for (const auto& [k, v] : kvs)
    if (k == key) return &v;
  return nullptr;
}

namespace {

bool valid_key(const std::string& key) {
  if (key.empty()) return false;
  for (char c : key) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                    c == '.' || c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

bool valid_value(const std::string& value) {
  for (char c : value)
    if (c == '\n' || c == '\r') return false;
  return true;
}

}  // namespace

void kv_add(KvList& kvs, const std::string& key, const std::string& value) {
  if (!valid_key(key))
    throw std::invalid_argument("bad report key '" + key + "'");
  if (!valid_value(value))
    throw std::invalid_argument("report value for '" + key +
                                "' contains a line break");
  kvs.emplace_back(key, value);
}

void Report::add_config(const std::string& key, const std::string& value) {
  kv_add(config, key, value);
}

KvList& Report::new_item() { return items.emplace_back(); }

void Report::add_summary(const std::string& key, const std::string& value) {
  kv_add(summary, key, value);
}

std::string Report::str() const {
  std::string out = "schema=" + schema + "\n";
  for (const auto& [k, v] : config) out += "config." + k + "=" + v + "\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string stem = "item." + std::to_string(i) + ".";
    for (const auto& [k, v] : items[i]) out += stem + k + "=" + v + "\n";
  }
  for (const auto& [k, v] : summary) out += "summary." + k + "=" + v + "\n";
  return out;
}

void Report::save(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << str();
  if (!f) throw std::runtime_error("write failed for " + path);
}

Report Report::parse(const std::string& text) {
  Report rep;
  rep.schema.clear();
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool saw_schema = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      throw ReportFormatError(line_no, "blank line inside report");
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ReportFormatError(line_no, "expected key=value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (!saw_schema) {
      if (key != "schema")
        throw ReportFormatError(line_no, "first line must be schema=");
      rep.schema = value;
      saw_schema = true;
      continue;
    }
    if (key.rfind("config.", 0) == 0) {
      std::string sub = key.substr(7);
      if (!valid_key(sub)) throw ReportFormatError(line_no, "bad key");
      rep.config.emplace_back(sub, value);
    } else if (key.rfind("item.", 0) == 0) {
      std::string rest = key.substr(5);
      auto dot = rest.find('.');
      if (dot == std::string::npos)
        throw ReportFormatError(line_no, "item key needs an index");
      std::size_t pos = 0;
      unsigned long idx = 0;
      try {
        idx = std::stoul(rest.substr(0, dot), &pos);
      } catch (const std::exception&) {
        throw ReportFormatError(line_no, "bad item index");
      }
      if (pos != dot) throw ReportFormatError(line_no, "bad item index");
      std::string sub = rest.substr(dot + 1);
      if (!valid_key(sub)) throw ReportFormatError(line_no, "bad key");
      if (idx == rep.items.size()) {
        rep.items.emplace_back();
      } else if (rep.items.empty() || idx + 1 != rep.items.size()) {
        throw ReportFormatError(line_no, "item index out of order");
      }
      rep.items.back().emplace_back(sub, value);
    } else if (key.rfind("summary.", 0) == 0) {
      std::string sub = key.substr(8);
      if (!valid_key(sub)) throw ReportFormatError(line_no, "bad key");
      rep.summary.emplace_back(sub, value);
    } else {
      throw ReportFormatError(line_no, "unknown section for key '" + key +
                                           "'");
    }
  }
  if (!saw_schema) throw ReportFormatError(1, "empty report");
  return rep;
}

Report Report::load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

}  // namespace rainbow
