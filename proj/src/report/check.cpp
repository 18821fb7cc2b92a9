#include "tpsgeo/report/check.hpp"

namespace tpsgeo::report {

const char* status_name(Status s) {
  switch (s) {
    case Status::exact_pass: return "exact-pass";
    case Status::numeric_pass: return "numeric-pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not-applicable";
  }
  return "fail";
}

Check exact(std::string claim, std::string ref, bool ok, nlohmann::json witness) {
  return Check{std::move(claim), std::move(ref), ok ? Status::exact_pass : Status::fail, std::move(witness)};
}

Check numeric(std::string claim, std::string ref, bool ok, nlohmann::json witness) {
  return Check{std::move(claim), std::move(ref), ok ? Status::numeric_pass : Status::fail, std::move(witness)};
}

Check not_applicable(std::string claim, std::string ref, nlohmann::json witness) {
  return Check{std::move(claim), std::move(ref), Status::not_applicable, std::move(witness)};
}

bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

void append(std::vector<Check>& into, const std::vector<Check>& more) {
  into.insert(into.end(), more.begin(), more.end());
}

}  // namespace tpsgeo::report
