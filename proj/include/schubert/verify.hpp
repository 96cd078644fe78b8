#pragma once

// The reproduction report: one record per published computation, each naming
// the operations it exercises, how the expected value is known, and the outcome.

#include <set>
#include <string>
#include <vector>

#include "schubert/json_io.hpp"

namespace schubert {

struct VerifyRecord {
  std::string id;
  std::string location;  // which statement of the source the value comes from
  Json inputs;
  Json computed;
  Json expected;
  std::string basis;     // "published", "immediate" or "derived"
  std::string oracle;    // how a derived value was obtained; empty otherwise
  std::string status;    // "pass", "fail" or "assumed"
  std::vector<std::string> assumptions;
  std::vector<std::string> ops;
};

struct VerifyReport {
  std::vector<VerifyRecord> records;  // sorted by id
  std::set<std::string> ops_covered;
  std::vector<std::string> ops_missing;
  bool passed() const;
};

/// Every operation of the library the report must exercise, as "module.op".
const std::vector<std::string>& all_operations();

VerifyReport verify_paper();

Json to_json(const VerifyRecord& r);
Json to_json(const VerifyReport& r);

}  // namespace schubert
