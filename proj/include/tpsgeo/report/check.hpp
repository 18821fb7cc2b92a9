#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace tpsgeo::report {

enum class Status { exact_pass, numeric_pass, fail, not_applicable };

const char* status_name(Status s);

// One verified claim. `ref` is a short topic anchor, or "plumbing".
struct Check {
  std::string claim;
  std::string ref;
  Status status = Status::fail;
  nlohmann::json witness;

  bool passed() const { return status != Status::fail; }
};

Check exact(std::string claim, std::string ref, bool ok, nlohmann::json witness = nullptr);
Check numeric(std::string claim, std::string ref, bool ok, nlohmann::json witness = nullptr);
Check not_applicable(std::string claim, std::string ref, nlohmann::json witness = nullptr);

bool all_passed(const std::vector<Check>& checks);
void append(std::vector<Check>& into, const std::vector<Check>& more);

}  // namespace tpsgeo::report
