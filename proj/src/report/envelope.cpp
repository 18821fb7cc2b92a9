#include "tpsgeo/report/envelope.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace tpsgeo::report {

using nlohmann::json;

#ifndef TPSGEO_VERSION
#define TPSGEO_VERSION "0.0.0"
#endif

const char* tool_version() { return TPSGEO_VERSION; }

bool Envelope::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.check.passed(); });
}

size_t Envelope::count(Status s) const {
  return static_cast<size_t>(
      std::count_if(results.begin(), results.end(), [s](const SuiteResult& r) { return r.check.status == s; }));
}

int thread_limit() {
  int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("TPSGEO_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, hw));
  }
  return hw;
}

std::vector<SuiteResult> run_suites(const std::vector<Suite>& suites, int threads) {
  std::vector<std::vector<Check>> out(suites.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < suites.size(); i = next++) {
      try {
        out[i] = suites[i].run();
      } catch (const std::exception& e) {
        out[i] = {exact("suite ran to completion", "plumbing", false, json{{"error", e.what()}})};
      }
    }
  };
  size_t workers = std::min(suites.size(), static_cast<size_t>(std::max(threads, 1)));
  std::vector<std::thread> pool;
  for (size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<SuiteResult> flat;
  for (size_t i = 0; i < suites.size(); ++i)
    for (auto& c : out[i]) flat.push_back({suites[i].name, std::move(c)});
  return flat;
}

json to_json(const Envelope& e, bool include_timing) {
  json results = json::array();
  for (const auto& r : e.results)
    results.push_back({{"suite", r.suite},
                       {"claim", r.check.claim},
                       {"paper_ref", r.check.ref},
                       {"status", status_name(r.check.status)},
                       {"witness", r.check.witness}});
  json j{{"tool_version", tool_version()},
         {"command", e.command},
         {"inputs", e.inputs},
         {"results", results},
         {"summary",
          {{"total", e.results.size()},
           {"exact_pass", e.count(Status::exact_pass)},
           {"numeric_pass", e.count(Status::numeric_pass)},
           {"fail", e.count(Status::fail)},
           {"not_applicable", e.count(Status::not_applicable)},
           {"all_passed", e.all_passed()}}}};
  if (include_timing) j["timing"] = {{"wall_seconds", e.wall_seconds}, {"threads", e.threads}};
  return j;
}

namespace {

std::string cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

}  // namespace

std::string to_markdown(const Envelope& e) {
  std::ostringstream md;
  md << "# tpsgeo " << e.command << "\n\n";
  md << "- tool version: " << tool_version() << "\n";
  md << "- inputs: `" << e.inputs.dump() << "`\n";
  md << "- checks: " << e.results.size() << " (" << e.count(Status::exact_pass) << " exact-pass, "
     << e.count(Status::numeric_pass) << " numeric-pass, " << e.count(Status::fail) << " fail, "
     << e.count(Status::not_applicable) << " not-applicable)\n";
  md << "- verdict: " << (e.all_passed() ? "PASS" : "FAIL") << "\n\n";
  md << "| suite | claim | ref | status | witness |\n|---|---|---|---|---|\n";
  for (const auto& r : e.results) {
    std::string w = r.check.witness.is_null() ? "" : r.check.witness.dump();
    if (w.size() > 160) w = w.substr(0, 157) + "...";
    md << "| " << cell(r.suite) << " | " << cell(r.check.claim) << " | " << cell(r.check.ref) << " | "
       << status_name(r.check.status) << " | " << cell(w) << " |\n";
  }
  return md.str();
}

}  // namespace tpsgeo::report
