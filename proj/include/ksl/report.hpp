#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace ksl {

using OrderedJson = nlohmann::ordered_json;

/// One verification check: a stable id, a human description, the slug of the
/// mathematical fact it certifies, pass/fail, and the witness values.
struct CheckRecord {
  std::string id;
  std::string description;
  std::string anchor;
  bool pass = false;
  std::string witness;
};

struct Report {
  static constexpr int kSchemaVersion = 1;

  std::string suite;
  std::vector<CheckRecord> checks;

  std::size_t pass_count() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.pass ? 1 : 0;
    return n;
  }
  std::size_t fail_count() const { return checks.size() - pass_count(); }
  bool all_pass() const { return fail_count() == 0; }

  OrderedJson to_json() const {
    OrderedJson j;
    j["schema_version"] = kSchemaVersion;
    j["suite"] = suite;
    j["checks"] = OrderedJson::array();
    for (const auto& c : checks) {
      OrderedJson e;
      e["id"] = c.id;
      e["description"] = c.description;
      e["anchor"] = c.anchor;
      e["status"] = c.pass ? "pass" : "fail";
      e["witness"] = c.witness;
      j["checks"].push_back(std::move(e));
    }
    j["summary"] = {{"total", checks.size()}, {"pass", pass_count()}, {"fail", fail_count()}};
    return j;
  }
};

}  // namespace ksl
