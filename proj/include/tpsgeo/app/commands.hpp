#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "tpsgeo/report/envelope.hpp"

namespace tpsgeo::app {

enum class Space { tps, sympl };
Space space_from_name(const std::string& s);
const char* space_name(Space s);

// Largest n accepted per space.
int max_n(Space s);
constexpr int kMaxKillingDegree = 4;

// Every command throws InputError on out-of-range arguments or malformed input.
report::Envelope curvature(Space space, int n);
report::Envelope killing(Space space, int n, int degree);

// points: {"points": [[...], ...]} or {"grid": {"ranges": [[lo, hi], ...], "counts": [k, ...]}}
report::Envelope potential(const nlohmann::json& model, const nlohmann::json& points);
std::vector<std::vector<double>> expand_points(const nlohmann::json& points, int n);

struct VerifyOptions {
  int n_max = 4;
  std::vector<std::string> only;  // empty runs every module
  bool tamper = false;
  int samples = 100;
  unsigned long seed = 20240607;
};

std::vector<std::string> verify_modules();
report::Envelope verify_all(const VerifyOptions& options);

}  // namespace tpsgeo::app
