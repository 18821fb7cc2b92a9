#pragma once

#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

#include "tpsgeo/report/check.hpp"

namespace tpsgeo::report {

const char* tool_version();

// A named batch of checks; suites run independently and report in declared order.
struct Suite {
  std::string name;
  std::function<std::vector<Check>()> run;
};

struct SuiteResult {
  std::string suite;
  Check check;
};

struct Envelope {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<SuiteResult> results;
  double wall_seconds = 0;
  int threads = 1;

  bool all_passed() const;
  size_t count(Status s) const;
};

// Positive TPSGEO_THREADS caps the pool; otherwise hardware concurrency.
int thread_limit();

// Runs suites on a pool of at most `threads` workers. An exception inside a
// suite becomes a single failing check carrying the message.
std::vector<SuiteResult> run_suites(const std::vector<Suite>& suites, int threads);

nlohmann::json to_json(const Envelope& e, bool include_timing = true);
std::string to_markdown(const Envelope& e);

}  // namespace tpsgeo::report
